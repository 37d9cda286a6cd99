#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "quintic/dpf.hpp"
#include "quintic/invariants.hpp"

namespace quintic {

/// One classified field: the normalized radicand with its conductor data,
/// the 5-valuations V_F of the class numbers of the degree 5 / 10 / 20
/// fields, the subfield unit index exponent E, the eligibility pattern, the
/// realized DPF type and (when informative) the principal factors.
struct FieldRecord {
    int row_no = 0;
    std::int64_t D = 0;
    SpeciesTag species = SpeciesTag::S1b;
    Factorization f4;
    std::int64_t m = 1;
    int V_L = 0, V_M = 0, V_N = 0;
    int E = 0;
    Pattern pattern{};
    DpfTypeName dpf_type = DpfTypeName::Epsilon;
    std::string principal_factors;  // free text, empty when omitted
    bool prototype_flag = false;

    friend bool operator==(const FieldRecord&, const FieldRecord&) = default;
};

/// The built-in reference table: the 125 fields with normalized radicand
/// 2 <= D <= 150.
const std::vector<FieldRecord>& embedded_dataset();

/// TSV ingestion. Header row required; '#' starts a comment line. Columns:
/// no, D, species, f4, m, VL, VM, VN, E, pattern, type, pf, proto.
/// Throws std::runtime_error with a line-precise message on malformed
/// factored strings, unknown type names, bad patterns, or non-normalized D.
std::vector<FieldRecord> load_dataset(std::istream& in);
std::vector<FieldRecord> load_dataset_file(const std::string& path);

/// Inverse of load_dataset; load(to_tsv(r)) == r byte-for-byte on re-export.
std::string to_tsv(const std::vector<FieldRecord>& records);

/// Frequencies of the realized types among records with D < d_max, keyed in
/// display order. Types that never occur are present with count 0.
std::map<DpfTypeName, int> type_frequencies(const std::vector<FieldRecord>& records,
                                            std::int64_t d_max);

}  // namespace quintic
