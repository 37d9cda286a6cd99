#include "quintic/dataset.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace quintic {

const char* embedded_dataset_tsv();  // dataset_embedded.cpp

namespace {

constexpr std::string_view kHeader = "no\tD\tspecies\tf4\tm\tVL\tVM\tVN\tE\tpattern\ttype\tpf\tproto";

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::runtime_error("dataset line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t next = line.find('\t', pos);
        out.push_back(line.substr(pos, next == std::string::npos ? next : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

template <typename T>
T parse_number(const std::string& field, int line, const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        fail(line, std::string("bad ") + what + " '" + field + "'");
    return value;
}

}  // namespace

std::vector<FieldRecord> load_dataset(std::istream& in) {
    std::vector<FieldRecord> records;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != kHeader) fail(line_no, "expected header '" + std::string(kHeader) + "'");
            header_seen = true;
            continue;
        }
        std::vector<std::string> f = split_tabs(line);
        if (f.size() != 13) fail(line_no, "expected 13 tab-separated fields, got " + std::to_string(f.size()));
        FieldRecord r;
        r.row_no = parse_number<int>(f[0], line_no, "row number");
        r.D = parse_number<std::int64_t>(f[1], line_no, "radicand");
        auto species = parse_species(f[2]);
        if (!species) fail(line_no, "unknown species '" + f[2] + "'");
        r.species = *species;
        try {
            r.f4 = Factorization::parse(f[3]);
        } catch (const std::exception& e) {
            fail(line_no, e.what());
        }
        r.m = parse_number<std::int64_t>(f[4], line_no, "multiplicity");
        r.V_L = parse_number<int>(f[5], line_no, "VL");
        r.V_M = parse_number<int>(f[6], line_no, "VM");
        r.V_N = parse_number<int>(f[7], line_no, "VN");
        r.E = parse_number<int>(f[8], line_no, "E");
        if (r.E < 0 || r.E > 6) fail(line_no, "E out of range 0..6");
        auto pattern = parse_pattern(f[9]);
        if (!pattern) fail(line_no, "bad pattern '" + f[9] + "'");
        r.pattern = *pattern;
        auto type = parse_type_name(f[10]);
        if (!type) fail(line_no, "unknown type name '" + f[10] + "'");
        r.dpf_type = *type;
        r.principal_factors = f[11];
        if (f[12] != "0" && f[12] != "1") fail(line_no, "proto flag must be 0 or 1");
        r.prototype_flag = (f[12] == "1");
        try {
            Radicand d = make_radicand(r.D);
            if (d.value != r.D || !is_normalized(d)) fail(line_no, "radicand is not normalized");
        } catch (const std::invalid_argument& e) {
            fail(line_no, e.what());
        }
        records.push_back(std::move(r));
    }
    if (!header_seen) throw std::runtime_error("dataset: missing header row");
    return records;
}

std::vector<FieldRecord> load_dataset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file '" + path + "'");
    return load_dataset(in);
}

std::string to_tsv(const std::vector<FieldRecord>& records) {
    std::string out{kHeader};
    out += '\n';
    for (const FieldRecord& r : records) {
        out += std::to_string(r.row_no);
        out += '\t';
        out += std::to_string(r.D);
        out += '\t';
        out += to_string(r.species);
        out += '\t';
        out += to_conductor_string(r.f4);
        out += '\t';
        out += std::to_string(r.m);
        out += '\t';
        out += std::to_string(r.V_L);
        out += '\t';
        out += std::to_string(r.V_M);
        out += '\t';
        out += std::to_string(r.V_N);
        out += '\t';
        out += std::to_string(r.E);
        out += '\t';
        out += to_string(r.pattern);
        out += '\t';
        out += ascii_name(r.dpf_type);
        out += '\t';
        out += r.principal_factors;
        out += '\t';
        out += r.prototype_flag ? '1' : '0';
        out += '\n';
    }
    return out;
}

const std::vector<FieldRecord>& embedded_dataset() {
    static const std::vector<FieldRecord> records = [] {
        std::istringstream in(embedded_dataset_tsv());
        return load_dataset(in);
    }();
    return records;
}

std::map<DpfTypeName, int> type_frequencies(const std::vector<FieldRecord>& records,
                                            std::int64_t d_max) {
    std::map<DpfTypeName, int> counts;
    for (const DpfType& t : type_table()) counts[t.name] = 0;
    for (const FieldRecord& r : records)
        if (r.D < d_max) ++counts[r.dpf_type];
    return counts;
}

}  // namespace quintic
