#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "mapcount/edge_table.hpp"
#include "mapcount/edge_vertex_table.hpp"
#include "mapcount/genus_series.hpp"
#include "mapcount/integer.hpp"
#include "mapcount/unrooted.hpp"

namespace mapcount {

enum class TableKind { rooted_edges, rooted_edges_vertices, unrooted };
enum class Format { csv, json };

inline const char* kind_name(TableKind k) {
    switch (k) {
        case TableKind::rooted_edges: return "rooted-edges";
        case TableKind::rooted_edges_vertices: return "rooted-edges-vertices";
        case TableKind::unrooted: return "unrooted";
    }
    return "?";
}

/**
 * One serialized count. The vertices column is empty for edge-only
 * tables, a vertex count for bivariate rows, or the literal `sum` for a
 * stored row sum. Counts travel as decimal strings in every format; the
 * values overflow both 64-bit integers and double precision long before
 * the tables end.
 */
struct CountRecord {
    enum class VertexField { none, number, sum };

    TableKind kind = TableKind::rooted_edges;
    int genus = 0;
    int edges = 0;
    VertexField vfield = VertexField::none;
    int vertices = 0;  // meaningful only when vfield == number
    std::string count;

    bool operator==(const CountRecord&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// ---- record extraction ----------------------------------------------------

inline std::vector<CountRecord> to_records(const EdgeTable& table) {
    std::vector<CountRecord> out;
    for (int g = 0; g <= table.max_genus(); ++g)
        for (int n = 0; n <= table.max_edges(); ++n)
            out.push_back({TableKind::rooted_edges, g, n, CountRecord::VertexField::none, 0,
                           to_decimal(table.lookup(g, n))});
    return out;
}

inline std::vector<CountRecord> to_records(const EdgeVertexTable& table) {
    if (table.axis() != Axis::vertices)
        throw std::invalid_argument("to_records: reinterpret the table as vertices first");
    std::vector<CountRecord> out;
    for (int g = 0; g <= table.max_genus(); ++g)
        for (int n = 2 * g; n <= table.max_edges(); ++n)
            for (int v = 1; v <= n + 1 - 2 * g; ++v)
                out.push_back({TableKind::rooted_edges_vertices, g, n,
                               CountRecord::VertexField::number, v,
                               to_decimal(table.lookup(g, n, v))});
    return out;
}

inline std::vector<CountRecord> to_records(const UnrootedTable& table) {
    std::vector<CountRecord> out;
    for (int g = 0; g <= table.max_genus(); ++g)
        for (int e = 2 * g; e <= table.max_edges(); ++e) {
            const auto& row = table.row(g, e);
            for (int v = 1; v <= static_cast<int>(row.size()); ++v)
                out.push_back({TableKind::unrooted, g, e, CountRecord::VertexField::number, v,
                               to_decimal(row[v - 1])});
            if (!row.empty())
                out.push_back({TableKind::unrooted, g, e, CountRecord::VertexField::sum, 0,
                               to_decimal(table.row_sum(g, e))});
        }
    return out;
}

// ---- writers ---------------------------------------------------------------

inline void write_csv(std::span<const CountRecord> records, std::ostream& os) {
    os << "kind,genus,edges,vertices,count\n";
    for (const auto& r : records) {
        os << kind_name(r.kind) << ',' << r.genus << ',' << r.edges << ',';
        if (r.vfield == CountRecord::VertexField::number)
            os << r.vertices;
        else if (r.vfield == CountRecord::VertexField::sum)
            os << "sum";
        os << ',' << r.count << '\n';
    }
}

inline void write_json(std::span<const CountRecord> records, std::ostream& os) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json obj;
        obj["kind"] = kind_name(r.kind);
        obj["genus"] = r.genus;
        obj["edges"] = r.edges;
        if (r.vfield == CountRecord::VertexField::number)
            obj["vertices"] = r.vertices;
        else if (r.vfield == CountRecord::VertexField::sum)
            obj["vertices"] = "sum";
        obj["count"] = r.count;
        arr.push_back(std::move(obj));
    }
    os << arr.dump(1) << '\n';
}

template <typename Table>
void export_table(const Table& table, Format format, std::ostream& os) {
    const auto records = to_records(table);
    if (format == Format::csv)
        write_csv(records, os);
    else
        write_json(records, os);
}

inline void write_polynomial_csv(const GenusPolynomial& poly, std::ostream& os) {
    os << "genus,power,coefficient\n";
    for (std::size_t l = 0; l < poly.coeffs.size(); ++l)
        os << poly.genus << ',' << l << ',' << to_decimal(poly.coeffs[l]) << '\n';
}

inline void write_polynomial_json(const GenusPolynomial& poly, std::ostream& os) {
    nlohmann::ordered_json obj;
    obj["genus"] = poly.genus;
    auto& coeffs = obj["coefficients"] = nlohmann::ordered_json::array();
    for (const auto& c : poly.coeffs) coeffs.push_back(to_decimal(c));
    os << obj.dump(1) << '\n';
}

// ---- CSV parsing -----------------------------------------------------------

namespace detail {

inline bool canonical_count(const std::string& s) {
    if (s.empty()) return false;
    if (s == "0") return true;
    if (s[0] < '1' || s[0] > '9') return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline int parse_small_int(const std::string& s, std::size_t line, const char* field) {
    if (s.empty()) throw ParseError(line, std::string("empty ") + field);
    for (char c : s)
        if (c < '0' || c > '9') throw ParseError(line, std::string("bad ") + field + " '" + s + "'");
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw ParseError(line, std::string(field) + " out of range: '" + s + "'");
    }
}

}  // namespace detail

inline std::vector<CountRecord> parse_csv(std::istream& is) {
    std::vector<CountRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            if (line != "kind,genus,edges,vertices,count")
                throw ParseError(1, "expected header 'kind,genus,edges,vertices,count'");
            continue;
        }
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const auto comma = line.find(',', pos);
            if (comma == std::string::npos) {
                fields.push_back(line.substr(pos));
                break;
            }
            fields.push_back(line.substr(pos, comma - pos));
            pos = comma + 1;
        }
        if (fields.size() != 5) throw ParseError(lineno, "expected 5 fields, got " + std::to_string(fields.size()));

        CountRecord r;
        if (fields[0] == "rooted-edges")
            r.kind = TableKind::rooted_edges;
        else if (fields[0] == "rooted-edges-vertices")
            r.kind = TableKind::rooted_edges_vertices;
        else if (fields[0] == "unrooted")
            r.kind = TableKind::unrooted;
        else
            throw ParseError(lineno, "unknown kind '" + fields[0] + "'");
        r.genus = detail::parse_small_int(fields[1], lineno, "genus");
        r.edges = detail::parse_small_int(fields[2], lineno, "edges");
        if (fields[3].empty()) {
            r.vfield = CountRecord::VertexField::none;
        } else if (fields[3] == "sum") {
            r.vfield = CountRecord::VertexField::sum;
        } else {
            r.vfield = CountRecord::VertexField::number;
            r.vertices = detail::parse_small_int(fields[3], lineno, "vertices");
        }
        if (!detail::canonical_count(fields[4]))
            throw ParseError(lineno, "count '" + fields[4] + "' is not a canonical decimal integer");
        r.count = fields[4];
        out.push_back(std::move(r));
    }
    return out;
}

// ---- verification ----------------------------------------------------------

enum class CheckStatus { pass, value_mismatch, out_of_coverage, kind_mismatch, malformed };

struct CheckResult {
    CountRecord record;
    CheckStatus status = CheckStatus::pass;
    std::string expected;  // fixture value
    std::string actual;    // table value (empty when not comparable)
};

struct VerifyReport {
    std::vector<CheckResult> results;
    std::size_t passed = 0;
    std::size_t failed = 0;

    bool ok() const { return failed == 0; }
};

namespace detail {

template <typename LookupFn>
void check_record(VerifyReport& report, const CountRecord& r, TableKind expected_kind,
                  int max_genus, int max_edges, LookupFn&& lookup) {
    CheckResult res{r, CheckStatus::pass, r.count, ""};
    if (r.kind != expected_kind) {
        res.status = CheckStatus::kind_mismatch;
    } else if (r.genus > max_genus || r.edges > max_edges) {
        res.status = CheckStatus::out_of_coverage;
    } else {
        std::string actual;
        if (!lookup(r, actual)) {
            res.status = CheckStatus::malformed;
        } else {
            res.actual = actual;
            if (actual != r.count) res.status = CheckStatus::value_mismatch;
        }
    }
    if (res.status == CheckStatus::pass)
        ++report.passed;
    else
        ++report.failed;
    report.results.push_back(std::move(res));
}

}  // namespace detail

inline VerifyReport verify_fixtures(const UnrootedTable& table, std::span<const CountRecord> records) {
    VerifyReport report;
    for (const auto& r : records)
        detail::check_record(report, r, TableKind::unrooted, table.max_genus(), table.max_edges(),
                             [&](const CountRecord& rec, std::string& actual) {
                                 if (rec.vfield == CountRecord::VertexField::sum)
                                     actual = to_decimal(table.row_sum(rec.genus, rec.edges));
                                 else if (rec.vfield == CountRecord::VertexField::number)
                                     actual = to_decimal(table.lookup(rec.genus, rec.edges, rec.vertices));
                                 else
                                     return false;
                                 return true;
                             });
    return report;
}

inline VerifyReport verify_fixtures(const EdgeVertexTable& table, std::span<const CountRecord> records) {
    if (table.axis() != Axis::vertices)
        throw std::invalid_argument("verify_fixtures: reinterpret the table as vertices first");
    VerifyReport report;
    for (const auto& r : records)
        detail::check_record(report, r, TableKind::rooted_edges_vertices, table.max_genus(),
                             table.max_edges(), [&](const CountRecord& rec, std::string& actual) {
                                 if (rec.vfield == CountRecord::VertexField::sum)
                                     actual = to_decimal(table.row_sum(rec.genus, rec.edges));
                                 else if (rec.vfield == CountRecord::VertexField::number)
                                     actual = to_decimal(table.lookup(rec.genus, rec.edges, rec.vertices));
                                 else
                                     return false;
                                 return true;
                             });
    return report;
}

inline VerifyReport verify_fixtures(const EdgeTable& table, std::span<const CountRecord> records) {
    VerifyReport report;
    for (const auto& r : records)
        detail::check_record(report, r, TableKind::rooted_edges, table.max_genus(), table.max_edges(),
                             [&](const CountRecord& rec, std::string& actual) {
                                 if (rec.vfield != CountRecord::VertexField::none) return false;
                                 actual = to_decimal(table.lookup(rec.genus, rec.edges));
                                 return true;
                             });
    return report;
}

inline std::string describe(const CheckResult& res) {
    const auto& r = res.record;
    std::string where = std::string(kind_name(r.kind)) + " g=" + std::to_string(r.genus) +
                        " e=" + std::to_string(r.edges);
    if (r.vfield == CountRecord::VertexField::number)
        where += " v=" + std::to_string(r.vertices);
    else if (r.vfield == CountRecord::VertexField::sum)
        where += " v=sum";
    switch (res.status) {
        case CheckStatus::pass:
            return "PASS " + where;
        case CheckStatus::value_mismatch:
            return "FAIL " + where + ": expected " + res.expected + ", computed " + res.actual;
        case CheckStatus::out_of_coverage:
            return "FAIL " + where + ": outside the coverage of the built table";
        case CheckStatus::kind_mismatch:
            return "FAIL " + where + ": fixture kind does not match the table";
        case CheckStatus::malformed:
            return "FAIL " + where + ": vertices field is not valid for this kind";
    }
    return "";
}

}  // namespace mapcount
