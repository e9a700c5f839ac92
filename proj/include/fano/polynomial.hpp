#pragma once

#include "fano/monomial.hpp"
#include "fano/order.hpp"
#include "fano/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

namespace fano {

template <class K>
struct Term {
    Monomial m;
    K c;
};

/// Sparse multivariate polynomial. Terms are kept sorted descending under
/// grevlex (the canonical storage order); no zero coefficients are stored.
template <class K>
class Polynomial {
  public:
    using term_type = Term<K>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr ring, K c) {
        Polynomial f(ring);
        if (!c.is_zero()) f.terms_.push_back({Monomial(ring->arity()), std::move(c)});
        return f;
    }

    static Polynomial constant(RingPtr ring, std::int64_t n) {
        return constant(ring, field_ops<K>::from_int(*ring, n));
    }

    static Polynomial variable(RingPtr ring, std::size_t i, std::uint16_t k = 1) {
        Polynomial f(ring);
        f.terms_.push_back({Monomial::variable(ring->arity(), i, k), field_ops<K>::one(*ring)});
        return f;
    }

    static Polynomial monomial(RingPtr ring, Monomial m, K c) {
        Polynomial f(ring);
        if (!c.is_zero()) f.terms_.push_back({std::move(m), std::move(c)});
        return f;
    }

    /// Build from unsorted, possibly duplicated term list.
    static Polynomial from_terms(RingPtr ring, std::vector<term_type> terms) {
        Polynomial f(ring);
        std::map<Monomial, K, OrderDesc> acc{OrderDesc{MonomialOrder::grevlex()}};
        for (auto& t : terms) {
            auto it = acc.find(t.m);
            if (it == acc.end())
                acc.emplace(std::move(t.m), std::move(t.c));
            else
                it->second += t.c;
        }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) f.terms_.push_back({m, c});
        return f;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<term_type>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.m.degree() != terms_.front().m.degree()) return false;
        return true;
    }

    std::uint32_t total_degree() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.m.degree());
        return d;
    }

    /// Leading term under an arbitrary order (linear scan unless grevlex).
    const term_type& leading_term(const MonomialOrder& ord) const {
        if (ord.kind() == MonomialOrder::Kind::Grevlex) return terms_.front();
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ord.greater(terms_[i].m, terms_[best].m)) best = i;
        return terms_[best];
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        Polynomial r(ring_);
        r.terms_ = merge(terms_, o.terms_, false);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        Polynomial r(ring_);
        r.terms_ = merge(terms_, o.terms_, true);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        require_same_ring(ring_, o.ring_);
        Polynomial r(ring_);
        if (is_zero() || o.is_zero()) return r;
        std::map<Monomial, K, OrderDesc> acc{OrderDesc{MonomialOrder::grevlex()}};
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                Monomial m = a.m * b.m;
                K c = a.c * b.c;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(c));
                else
                    it->second += c;
            }
        for (auto& [m, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({m, c});
        return r;
    }

    Polynomial scaled(const K& c) const {
        Polynomial r(ring_);
        if (c.is_zero()) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.c *= c;
        return r;
    }

    /// this * c * m
    Polynomial times_term(const K& c, const Monomial& m) const {
        Polynomial r(ring_);
        if (c.is_zero()) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    bool operator==(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_) || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    K evaluate(const std::vector<K>& point) const {
        if (point.size() != ring_->arity()) throw ArityMismatch("evaluation point has wrong length");
        std::vector<std::vector<K>> pow(ring_->arity());
        K acc = field_ops<K>::zero(*ring_);
        for (const auto& t : terms_) {
            K v = t.c;
            for (std::size_t i = 0; i < point.size(); ++i) {
                std::uint16_t e = t.m[i];
                if (e == 0) continue;
                auto& pw = pow[i];
                if (pw.empty()) pw.push_back(field_ops<K>::one(*ring_));
                while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
                v *= pw[e];
            }
            acc += v;
        }
        return acc;
    }

    /// Ring homomorphism: variable i maps to images[i]. One image per variable,
    /// all images in one common target ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != ring_->arity()) throw ArityMismatch("one image per ring variable required");
        RingPtr target = images.empty() ? ring_ : images.front().ring();
        for (const auto& g : images) require_same_ring(target, g.ring());
        std::vector<std::vector<Polynomial>> pow(images.size());
        Polynomial acc = Polynomial::zero(target);
        for (const auto& t : terms_) {
            Polynomial v = Polynomial::constant(target, t.c);
            for (std::size_t i = 0; i < images.size(); ++i) {
                std::uint16_t e = t.m[i];
                if (e == 0) continue;
                auto& pw = pow[i];
                if (pw.empty()) pw.push_back(Polynomial::constant(target, field_ops<K>::one(*target)));
                while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
                v *= pw[e];
            }
            acc += v;
        }
        return acc;
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial r(ring_);
        for (const auto& t : terms_) {
            std::uint16_t e = t.m[var];
            if (e == 0) continue;
            K c = t.c * field_ops<K>::from_int(*ring_, e);
            if (c.is_zero()) continue;
            auto exps = t.m.exponents();
            exps[var] -= 1;
            r.terms_.push_back({Monomial(std::move(exps)), std::move(c)});
        }
        // derivative preserves grevlex descending order? not necessarily; re-sort
        std::sort(r.terms_.begin(), r.terms_.end(), [](const term_type& a, const term_type& b) {
            return MonomialOrder::grevlex().greater(a.m, b.m);
        });
        return r;
    }

    /// Monic w.r.t. leading coefficient under ord.
    Polynomial monic(const MonomialOrder& ord) const {
        if (is_zero()) return *this;
        return scaled(leading_term(ord).c.inverse());
    }

  private:
    static std::vector<term_type> merge(const std::vector<term_type>& a, const std::vector<term_type>& b,
                                        bool subtract) {
        std::vector<term_type> out;
        out.reserve(a.size() + b.size());
        MonomialOrder g = MonomialOrder::grevlex();
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            int c = g.compare(a[i].m, b[j].m);
            if (c > 0) {
                out.push_back(a[i++]);
            } else if (c < 0) {
                out.push_back(b[j]);
                if (subtract) out.back().c = -out.back().c;
                ++j;
            } else {
                K s = subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
                if (!s.is_zero()) out.push_back({a[i].m, std::move(s)});
                ++i;
                ++j;
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j) {
            out.push_back(b[j]);
            if (subtract) out.back().c = -out.back().c;
        }
        return out;
    }

    RingPtr ring_;
    std::vector<term_type> terms_;
};

using PolyFp = Polynomial<Fp>;
using PolyQ = Polynomial<Rational>;

}  // namespace fano
