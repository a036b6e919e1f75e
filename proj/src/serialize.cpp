#include "qsplit/serialize.hpp"
#include "qsplit/version.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qsplit {

namespace {

std::string q_str(const mpq_class& q) { return q.get_str(); }

mpq_class q_parse(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return q;
}

} // namespace

ordered_json to_json(const GrossClassResult& r) {
    ordered_json j;
    j["schema"] = kSchema;
    j["disc"] = r.D;
    ordered_json biq = ordered_json::array();
    for (const auto& b : r.biquadratics)
        biq.push_back({b.classes[0], b.classes[1], b.classes[2]});
    j["biquadratics"] = biq;
    ordered_json quat = ordered_json::array();
    for (const auto& q : r.quaternions) quat.push_back(q.discriminant());
    j["quaternions"] = quat;
    j["primes"] = {r.primes[0], r.primes[1]};
    j["delta"] = {{"subfield", r.delta.subfield},
                  {"u", q_str(r.delta.u)},
                  {"v", q_str(r.delta.v)}};
    return j;
}

GrossClassResult gross_result_from_json(const ordered_json& j) {
    if (j.at("schema").get<std::string>() != kSchema)
        throw std::runtime_error("gross_result_from_json: schema mismatch");
    GrossClassResult r;
    r.D = j.at("disc").get<i64>();
    for (int i = 0; i < 4; ++i) {
        auto t = j.at("biquadratics").at(i);
        r.biquadratics[i].classes = {t.at(0).get<i64>(), t.at(1).get<i64>(),
                                     t.at(2).get<i64>()};
        i64 disc = j.at("quaternions").at(i).get<i64>();
        // rebuild the ramified set from the discriminant and parity
        RamifiedSet ram;
        if (disc != 1)
            for (auto [p, e] : factorize(disc)) ram.finite_places.push_back(p);
        ram.infinite_ramified = ram.finite_places.size() % 2 == 1;
        r.quaternions[i] = Quaternion{ram};
    }
    r.primes = {j.at("primes").at(0).get<i64>(), j.at("primes").at(1).get<i64>()};
    r.delta.subfield = j.at("delta").at("subfield").get<i64>();
    r.delta.u = q_parse(j.at("delta").at("u").get<std::string>());
    r.delta.v = q_parse(j.at("delta").at("v").get<std::string>());
    return r;
}

ordered_json to_json(const ClassificationReport& rep) {
    ordered_json j;
    j["schema"] = kSchema;
    j["total"] = rep.total();
    auto entries = [](const std::vector<AlgebraEntry>& v) {
        ordered_json out = ordered_json::array();
        for (const auto& e : v) {
            ordered_json je;
            je["type"] = e.type;
            je["discs"] = e.discs;
            if (!e.class_group.empty()) je["class_group"] = e.class_group;
            out.push_back(je);
        }
        return out;
    };
    j["product_algebras"] = entries(rep.product_algebras);
    j["matrix_algebras"] = entries(rep.matrix_algebras);
    j["admissible_2x2"] = rep.admissible_c2c2;
    j["excluded_2x2"] = rep.excluded_c2c2;
    return j;
}

std::string format_csv(const GrossClassResult& r) {
    std::ostringstream os;
    os << "disc,biquadratics,quaternions\n" << r.D << ",\"";
    for (int i = 0; i < 4; ++i) {
        if (i) os << " ";
        os << "(" << r.biquadratics[i].classes[0] << "," << r.biquadratics[i].classes[1]
           << "," << r.biquadratics[i].classes[2] << ")";
    }
    os << "\",\"";
    for (int i = 0; i < 4; ++i) {
        if (i) os << " ";
        os << r.quaternions[i].discriminant();
    }
    os << "\"\n";
    return os.str();
}

std::string format_markdown(const GrossClassResult& r) {
    std::ostringstream os;
    os << "| D | biquadratic fields | quaternion discriminants |\n";
    os << "|---|---|---|\n| " << r.D << " | ";
    for (int i = 0; i < 4; ++i) {
        if (i) os << ", ";
        os << "(" << r.biquadratics[i].classes[0] << "," << r.biquadratics[i].classes[1]
           << "," << r.biquadratics[i].classes[2] << ")";
    }
    os << " | ";
    for (int i = 0; i < 4; ++i) {
        if (i) os << ", ";
        os << r.quaternions[i].discriminant();
    }
    os << " |\n";
    return os.str();
}

std::filesystem::path cache_directory() {
    if (const char* env = std::getenv("QSPLIT_CACHE_DIR")) return env;
    return ".qsplit-cache";
}

std::filesystem::path cache_path(i64 D) {
    std::ostringstream name;
    name << "disc" << -D << "-v" << kVersion << ".json";
    return cache_directory() / name.str();
}

void cache_store(const GrossClassResult& r) {
    namespace fs = std::filesystem;
    fs::path dir = cache_directory();
    fs::create_directories(dir);
    fs::path final = cache_path(r.D);
    fs::path tmp = final;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << to_json(r).dump(2) << "\n";
    }
    fs::rename(tmp, final); // atomic against concurrent writers
}

std::optional<GrossClassResult> cache_load(i64 D) {
    std::ifstream in(cache_path(D));
    if (!in) return std::nullopt;
    ordered_json j = ordered_json::parse(in, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    try {
        return gross_result_from_json(j);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace qsplit
