#pragma once

// Bulk tables of Hurwitz numbers in all three conventions, with exact
// rational string values. Rows are ordered by (genus, degree, profile
// largest-lexicographic first), so output is deterministic.
//
// CSV header: g,b,n,q,r,H,Hprime,Hhat  (the profile is quoted).
// JSON: an array of objects with the same keys; g,n,q,r are numbers,
// everything else is a string.

#include "hurwitz/cut_join.hpp"
#include "hurwitz/normalization.hpp"
#include "hurwitz/partition.hpp"

#include "json.hpp"

#include <ostream>
#include <vector>

namespace hurwitz {

struct TableRow {
    int genus;
    Partition profile;
    Rational raw, prime, hat;

    int degree() const { return profile.degree(); }
    int length() const { return profile.length(); }
    int branch_points() const { return branch_point_count(genus, profile); }
};

inline std::vector<TableRow> build_table(CutJoinEngine& engine, int max_n, int max_genus) {
    std::vector<TableRow> rows;
    for (int g = 0; g <= max_genus; ++g)
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& b : all_partitions(n)) {
                const Rational raw = engine.raw(g, b);
                rows.push_back({g, b, raw, to_prime(b, raw), to_hat(g, b, raw)});
            }
    return rows;
}

inline void write_csv(const std::vector<TableRow>& rows, std::ostream& os) {
    os << "g,b,n,q,r,H,Hprime,Hhat\n";
    for (const TableRow& row : rows)
        os << row.genus << ",\"" << row.profile.str() << "\"," << row.degree() << ','
           << row.length() << ',' << row.branch_points() << ',' << to_string(row.raw) << ','
           << to_string(row.prime) << ',' << to_string(row.hat) << "\n";
}

inline void write_json(const std::vector<TableRow>& rows, std::ostream& os) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const TableRow& row : rows) {
        nlohmann::ordered_json obj;
        obj["g"] = row.genus;
        obj["b"] = row.profile.str();
        obj["n"] = row.degree();
        obj["q"] = row.length();
        obj["r"] = row.branch_points();
        obj["H"] = to_string(row.raw);
        obj["Hprime"] = to_string(row.prime);
        obj["Hhat"] = to_string(row.hat);
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << "\n";
}

}  // namespace hurwitz
