#ifndef QSPLIT_SERIALIZE_HPP
#define QSPLIT_SERIALIZE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "qsplit/classify.hpp"
#include "qsplit/nakamura.hpp"

namespace qsplit {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const GrossClassResult& r);
GrossClassResult gross_result_from_json(const ordered_json& j);
ordered_json to_json(const ClassificationReport& rep);

std::string format_csv(const GrossClassResult& r);
std::string format_markdown(const GrossClassResult& r);

/* Content-addressed result store keyed by discriminant and code version;
 * writes go through a temporary file and an atomic rename.  The directory
 * defaults to .qsplit-cache and honors QSPLIT_CACHE_DIR. */
std::filesystem::path cache_directory();
std::filesystem::path cache_path(i64 D);
void cache_store(const GrossClassResult& r);
std::optional<GrossClassResult> cache_load(i64 D);

} // namespace qsplit

#endif
