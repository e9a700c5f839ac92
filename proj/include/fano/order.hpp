#pragma once

#include "fano/monomial.hpp"

#include <stdexcept>
#include <string>

namespace fano {

/// Global monomial order: lex, grevlex, or block elimination of the first
/// `block` variables (grevlex within each block; any monomial touching the
/// first block beats any monomial free of it).
class MonomialOrder {
  public:
    enum class Kind { Lex, Grevlex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
    static MonomialOrder block_elim(std::size_t first_block_size) {
        return MonomialOrder(Kind::Block, first_block_size);
    }

    Kind kind() const { return kind_; }
    std::size_t block() const { return block_; }

    /// strict a > b
    bool greater(const Monomial& a, const Monomial& b) const {
        switch (kind_) {
            case Kind::Lex:
                return lex_greater(a, b, 0, a.arity());
            case Kind::Grevlex:
                return grevlex_greater(a, b, 0, a.arity());
            case Kind::Block: {
                int c = grevlex_cmp(a, b, 0, block_);
                if (c != 0) return c > 0;
                return grevlex_greater(a, b, block_, a.arity());
            }
        }
        return false;
    }

    int compare(const Monomial& a, const Monomial& b) const {
        if (greater(a, b)) return 1;
        if (greater(b, a)) return -1;
        return 0;
    }

    bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }
    bool operator<(const MonomialOrder& o) const {
        if (kind_ != o.kind_) return kind_ < o.kind_;
        return block_ < o.block_;
    }

    std::string str() const {
        switch (kind_) {
            case Kind::Lex: return "lex";
            case Kind::Grevlex: return "grevlex";
            case Kind::Block: return "elim:" + std::to_string(block_);
        }
        return "?";
    }

    static MonomialOrder parse(const std::string& s) {
        if (s == "lex") return lex();
        if (s == "grevlex") return grevlex();
        if (s.rfind("elim:", 0) == 0) return block_elim(std::stoul(s.substr(5)));
        throw std::invalid_argument("unknown monomial order: " + s);
    }

  private:
    MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}

    static bool lex_greater(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }

    static int grevlex_cmp(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        std::uint32_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }

    static bool grevlex_greater(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
        return grevlex_cmp(a, b, lo, hi) > 0;
    }

    Kind kind_;
    std::size_t block_;
};

/// Comparator functor: descending (leading term first).
struct OrderDesc {
    MonomialOrder ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord.greater(a, b); }
};

}  // namespace fano
