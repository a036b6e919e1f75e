#include "qsplit/nakamura.hpp"

namespace qsplit {

/* Reference rows, transcribed once and treated as ground truth for
 * regression diffs (never regenerated from the computation they check).
 * The -84 row carries the corrected (-14, 42) entry. */
const std::vector<Table1Row>& table1_expected() {
    static const std::vector<Table1Row> rows = {
        {-84, {{{-14, -2}, {-6, 2}, {-6, -42}, {-14, 42}}}, {2, 1, 2, 1}},
        {-120, {{{-5, 10}, {5, -10}, {-5, -10}, {5, 10}}}, {1, 6, 3, 1}},
        {-132, {{{22, -2}, {-6, -2}, {6, -66}, {-22, -66}}}, {1, 2, 1, 2}},
        {-168, {{{-14, -2}, {3, -21}, {14, 21}, {-3, 2}}}, {2, 1, 1, 1}},
        {-195, {{{13, -5}, {-13, -5}, {-13, 5}, {13, 5}}}, {13, 39, 26, 39}},
        {-228, {{{-38, -2}, {6, -2}, {-6, -114}, {38, -114}}}, {2, 1, 2, 1}},
        {-280, {{{-10, -5}, {-10, 5}, {10, -5}, {10, 5}}}, {2, 1, 14, 14}},
        {-312, {{{13, -26}, {-13, 26}, {-13, -26}, {13, 26}}}, {13, 39, 26, 39}},
        {-372, {{{-62, 31}, {-6, -3}, {-6, 31}, {-62, -3}}}, {2, 1, 2, 1}},
        {-408, {{{-17, 34}, {-17, -34}, {17, -34}, {17, 34}}}, {2, 1, 1, 1}},
        {-435, {{{-29, -5}, {-29, 5}, {29, -5}, {29, 5}}}, {2, 1, 1, 1}},
        {-483, {{{-23, 7}, {23, -69}, {-21, -7}, {21, 69}}}, {2, 1, 1, 1}},
        {-520, {{{-13, -5}, {13, -5}, {-13, 5}, {13, 5}}}, {1, 1, 1, 2}},
        {-532, {{{-38, -19}, {-14, 7}, {-14, -19}, {-38, 7}}}, {1, 2, 1, 2}},
        {-555, {{{37, -5}, {-37, -5}, {-37, 5}, {37, 5}}}, {37, 111, 74, 111}},
        {-595, {{{-17, 85}, {17, -85}, {-17, -85}, {17, 85}}}, {7, 1, 1, 14}},
        {-627, {{{19, -11}, {-19, -57}, {-33, 11}, {33, 57}}}, {1, 2, 1, 1}},
        {-708, {{{118, -59}, {-6, 3}, {6, -59}, {-118, 3}}}, {1, 2, 1, 2}},
        {-715, {{{-13, -65}, {13, -65}, {-13, 65}, {13, 65}}}, {5, 10, 55, 55}},
        {-760, {{{-10, 5}, {10, -5}, {-10, -5}, {10, 5}}}, {5, 95, 10, 95}},
        {-795, {{{-53, -5}, {53, -5}, {-53, 5}, {53, 5}}}, {6, 1, 1, 3}},
        {-1012, {{{-46, 23}, {-22, -11}, {-22, 23}, {-46, -11}}}, {2, 1, 2, 1}},
        {-1435, {{{-41, 205}, {-41, -205}, {41, -205}, {41, 205}}}, {2, 1, 1, 1}},
    };
    return rows;
}

const std::vector<i64>& c2c2_discriminants() {
    static const std::vector<i64> v = {-84,  -120, -132, -168, -195, -228,
                                       -280, -312, -340, -372, -408, -435,
                                       -483, -520, -532, -555, -595, -627,
                                       -708, -715, -760, -795, -1012, -1435};
    return v;
}

const std::vector<i64>& scoped_discriminants() {
    static const std::vector<i64> v = [] {
        std::vector<i64> out;
        for (i64 D : c2c2_discriminants())
            if (D != -340) out.push_back(D);
        return out;
    }();
    return v;
}

const std::vector<i64>& split_set_expected() {
    static const std::vector<i64> v = {-84,  -120, -132, -168, -228, -280,
                                       -372, -408, -435, -483, -520, -532,
                                       -595, -627, -708, -795, -1012, -1435};
    return v;
}

const std::vector<i64>& nonsplit_set_expected() {
    static const std::vector<i64> v = {-195, -312, -555, -715, -760};
    return v;
}

} // namespace qsplit
