#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "std_ca.hpp"

namespace msfssp {

class RuleFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Text format:
//   alphabet: # G _ F a b ...
//   l c r -> s
// Blank lines and lines starting with "//" are skipped.
inline RuleTable parse_rule_table(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw RuleFileError("line " + std::to_string(lineno) + ": " + msg);
    };
    auto skip = [](const std::string& s) {
        auto p = s.find_first_not_of(" \t\r");
        return p == std::string::npos || s.compare(p, 2, "//") == 0;
    };

    RuleTable table;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip(line)) continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string tag;
            ls >> tag;
            if (tag != "alphabet:") fail("expected 'alphabet:' header");
            std::vector<std::string> names;
            for (std::string n; ls >> n;) names.push_back(n);
            for (const char* req : {"#", "G", "_", "F"})
                if (std::find(names.begin(), names.end(), req) == names.end())
                    fail(std::string("alphabet must contain '") + req + "'");
            std::vector<std::string> extra;
            for (auto& n : names)
                if (n != "#" && n != "G" && n != "_" && n != "F") extra.push_back(n);
            try {
                table = RuleTable(Alphabet(std::move(extra)));
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
            have_header = true;
            continue;
        }
        std::string l, c, r, arrow, s, rest;
        if (!(ls >> l >> c >> r >> arrow >> s) || arrow != "->" || (ls >> rest))
            fail("expected 'l c r -> s'");
        try {
            const auto& ab = table.alphabet();
            table.set(ab.find(l), ab.find(c), ab.find(r), ab.find(s));
        } catch (const AlphabetMismatch& e) {
            fail(e.what());
        }
    }
    if (!have_header) throw RuleFileError("missing 'alphabet:' header");
    return table;
}

inline void write_rule_table(std::ostream& out, const RuleTable& table) {
    const auto& ab = table.alphabet();
    out << "alphabet:";
    for (const auto& n : ab.names()) out << ' ' << n;
    out << '\n';
    auto entries = table.entries();
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        return std::tie(a.left, a.center, a.right) < std::tie(b.left, b.center, b.right);
    });
    for (const auto& e : entries)
        out << ab.name(e.left) << ' ' << ab.name(e.center) << ' ' << ab.name(e.right) << " -> "
            << ab.name(e.next) << '\n';
}

// Declared firing time of a loaded table is whatever it measures.
inline BaselineSolver solver_from_table(std::string name, RuleTable table) {
    auto violations = validate_table(table);
    if (!violations.empty()) {
        std::string msg = "rule table '" + name + "' is invalid:";
        for (const auto& v : violations) msg += " [" + v.rule + "] " + v.detail + ";";
        throw RuleFileError(msg);
    }
    auto shared = std::make_shared<const RuleTable>(table);
    auto measured = [shared](std::size_t n) -> std::uint64_t {
        auto rep = run_until_fire(*shared, n, 16 * std::uint64_t{n} + 64);
        if (!rep.fire_step) throw std::runtime_error("loaded rule does not fire for n=" + std::to_string(n));
        return *rep.fire_step;
    };
    return BaselineSolver{std::move(name), std::move(table), measured, false};
}

inline BaselineSolver load_solver_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw RuleFileError("cannot open rule file " + path.string());
    return solver_from_table(path.stem().string(), parse_rule_table(in));
}

}  // namespace msfssp
