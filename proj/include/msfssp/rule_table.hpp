#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace msfssp {

// States of a standard CA. The first four ids are reserved for the
// distinguished states every alphabet carries.
enum class Symbol : std::uint32_t { border = 0, general = 1, quiescent = 2, fire = 3 };

using Word = std::vector<Symbol>;

constexpr std::uint32_t index_of(Symbol s) noexcept { return static_cast<std::uint32_t>(s); }

class AlphabetMismatch : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Alphabet {
public:
    Alphabet() : Alphabet(std::vector<std::string>{}) {}

    // Names for ids 4.. ; the distinguished names are always "#", "G", "_", "F".
    explicit Alphabet(std::vector<std::string> extra) {
        names_ = {"#", "G", "_", "F"};
        for (auto& n : extra) names_.push_back(std::move(n));
        for (std::uint32_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw std::invalid_argument("empty symbol name");
            if (!index_.emplace(names_[i], i).second)
                throw std::invalid_argument("duplicate symbol name '" + names_[i] + "'");
        }
    }

    std::size_t size() const noexcept { return names_.size(); }
    bool contains(Symbol s) const noexcept { return index_of(s) < names_.size(); }
    const std::string& name(Symbol s) const { return names_.at(index_of(s)); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    Symbol find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) throw AlphabetMismatch("unknown symbol '" + std::string(name) + "'");
        return static_cast<Symbol>(it->second);
    }

    Symbol add(std::string name) {
        auto id = static_cast<std::uint32_t>(names_.size());
        if (!index_.emplace(name, id).second)
            throw std::invalid_argument("duplicate symbol name '" + name + "'");
        names_.push_back(std::move(name));
        return static_cast<Symbol>(id);
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

// Ternary local rule. Only explicit transitions are stored; any other triple
// maps to its center symbol. Small alphabets also get a dense lookup array.
class RuleTable {
public:
    RuleTable() { rebuild_dense(); }
    explicit RuleTable(Alphabet alphabet) : alphabet_(std::move(alphabet)) { rebuild_dense(); }

    const Alphabet& alphabet() const noexcept { return alphabet_; }

    Symbol add_symbol(std::string name) {
        Symbol s = alphabet_.add(std::move(name));
        rebuild_dense();
        return s;
    }

    void set(Symbol l, Symbol c, Symbol r, Symbol next) {
        for (Symbol s : {l, c, r, next})
            if (!alphabet_.contains(s)) throw AlphabetMismatch("symbol id outside alphabet");
        if (next == c)
            explicit_.erase(key(l, c, r));
        else
            explicit_[key(l, c, r)] = next;
        if (dim_ != 0) dense_[slot(l, c, r)] = next;
    }

    Symbol operator()(Symbol l, Symbol c, Symbol r) const {
        if (dim_ != 0) return dense_[slot(l, c, r)];
        auto it = explicit_.find(key(l, c, r));
        return it == explicit_.end() ? c : it->second;
    }

    Symbol checked(Symbol l, Symbol c, Symbol r) const {
        if (!alphabet_.contains(l) || !alphabet_.contains(c) || !alphabet_.contains(r))
            throw AlphabetMismatch("symbol id " + std::to_string(index_of(l)) + "/" +
                                   std::to_string(index_of(c)) + "/" + std::to_string(index_of(r)) +
                                   " outside alphabet of size " + std::to_string(alphabet_.size()));
        return (*this)(l, c, r);
    }

    struct Entry {
        Symbol left, center, right, next;
    };

    std::vector<Entry> entries() const {
        std::vector<Entry> out;
        out.reserve(explicit_.size());
        for (auto [k, v] : explicit_) out.push_back({unkey(k, 2), unkey(k, 1), unkey(k, 0), v});
        return out;
    }

    std::size_t explicit_count() const noexcept { return explicit_.size(); }

private:
    static constexpr int kBits = 21;
    static constexpr std::size_t kDenseLimit = 64;

    static std::uint64_t key(Symbol l, Symbol c, Symbol r) noexcept {
        return (std::uint64_t{index_of(l)} << (2 * kBits)) | (std::uint64_t{index_of(c)} << kBits) |
               index_of(r);
    }
    static Symbol unkey(std::uint64_t k, int slot) noexcept {
        return static_cast<Symbol>((k >> (slot * kBits)) & ((1u << kBits) - 1));
    }
    std::size_t slot(Symbol l, Symbol c, Symbol r) const noexcept {
        return (std::size_t{index_of(l)} * dim_ + index_of(c)) * dim_ + index_of(r);
    }

    void rebuild_dense() {
        dim_ = alphabet_.size() <= kDenseLimit ? alphabet_.size() : 0;
        dense_.clear();
        if (dim_ == 0) return;
        dense_.resize(dim_ * dim_ * dim_);
        for (std::size_t l = 0; l < dim_; ++l)
            for (std::size_t c = 0; c < dim_; ++c)
                for (std::size_t r = 0; r < dim_; ++r)
                    dense_[(l * dim_ + c) * dim_ + r] = static_cast<Symbol>(c);
        for (auto [k, v] : explicit_) dense_[slot(unkey(k, 2), unkey(k, 1), unkey(k, 0))] = v;
    }

    Alphabet alphabet_;
    std::unordered_map<std::uint64_t, Symbol> explicit_;
    std::size_t dim_ = 0;
    std::vector<Symbol> dense_;
};

struct RuleViolation {
    std::string rule;    // short identifier, e.g. "border-fixity"
    std::string detail;
};

// Structural constraints every FSSP table must obey.
inline std::vector<RuleViolation> validate_table(const RuleTable& table) {
    std::vector<RuleViolation> out;
    const auto& ab = table.alphabet();
    const auto B = Symbol::border, Q = Symbol::quiescent, F = Symbol::fire;
    auto show = [&](const RuleTable::Entry& e) {
        return ab.name(e.left) + " " + ab.name(e.center) + " " + ab.name(e.right) + " -> " + ab.name(e.next);
    };
    if (ab.size() < 4) out.push_back({"distinguished", "alphabet lacks # G _ F"});
    if (table(Q, Q, Q) != Q) out.push_back({"quiescence", "_ _ _ must map to _"});
    if (table(Q, Q, B) != Q) out.push_back({"quiescence", "_ _ # must map to _"});
    for (const auto& e : table.entries()) {
        if (e.center == B && e.next != B) out.push_back({"border-fixity", show(e)});
        if (e.center == F && e.next != F) out.push_back({"fire-absorbing", show(e)});
    }
    return out;
}

}  // namespace msfssp
