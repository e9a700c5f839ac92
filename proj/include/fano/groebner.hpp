#pragma once

#include "fano/budget.hpp"
#include "fano/linalg.hpp"
#include "fano/polynomial.hpp"
#include "fano/rng.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <vector>

namespace fano {

struct NotZeroDimensional : std::runtime_error {
    NotZeroDimensional() : std::runtime_error("ideal is not zero-dimensional in its affine ring") {}
};

template <class K>
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order = MonomialOrder::grevlex();
    std::vector<Polynomial<K>> elements;  // reduced, monic, sorted ascending by leading term

    std::vector<Monomial> leading_terms() const {
        std::vector<Monomial> lts;
        lts.reserve(elements.size());
        for (const auto& g : elements) lts.push_back(g.leading_term(order).m);
        return lts;
    }

    bool contains_one() const {
        return elements.size() == 1 && !elements[0].is_zero() && elements[0].leading_term(order).m.is_one();
    }
};

namespace gb_detail {

/// Full reduction against a fixed set of monic divisors, all sorted
/// descending under `ord`.
template <class K>
class Reducer {
  public:
    Reducer(RingPtr ring, MonomialOrder ord) : ring_(std::move(ring)), ord_(ord) {}

    void add(std::vector<Term<K>> monic_terms) {
        lts_.push_back(monic_terms.front().m);
        basis_.push_back(std::move(monic_terms));
    }

    std::size_t size() const { return basis_.size(); }
    const std::vector<Term<K>>& element(std::size_t i) const { return basis_[i]; }
    const Monomial& lt(std::size_t i) const { return lts_[i]; }

    std::vector<Term<K>> reduce(const std::vector<Term<K>>& f) const {
        std::map<Monomial, K, OrderDesc> work{OrderDesc{ord_}};
        for (const auto& t : f) accumulate(work, t.m, t.c);
        std::vector<Term<K>> out;
        while (!work.empty()) {
            auto it = work.begin();
            Monomial m = it->first;
            K c = it->second;
            work.erase(it);
            if (c.is_zero()) continue;
            std::size_t gi = basis_.size();
            for (std::size_t i = 0; i < lts_.size(); ++i)
                if (lts_[i].divides(m)) {
                    gi = i;
                    break;
                }
            if (gi == basis_.size()) {
                out.push_back({std::move(m), std::move(c)});
                continue;
            }
            const auto& g = basis_[gi];
            Monomial q = m / lts_[gi];
            for (std::size_t j = 1; j < g.size(); ++j) accumulate(work, g[j].m * q, -(c * g[j].c));
        }
        return out;  // sorted descending under ord by construction
    }

  private:
    static void accumulate(std::map<Monomial, K, OrderDesc>& work, Monomial m, K c) {
        auto it = work.find(m);
        if (it == work.end()) {
            work.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) work.erase(it);
        }
    }

    RingPtr ring_;
    MonomialOrder ord_;
    std::vector<std::vector<Term<K>>> basis_;
    std::vector<Monomial> lts_;
};

template <class K>
std::vector<Term<K>> sorted_terms(const Polynomial<K>& f, const MonomialOrder& ord) {
    std::vector<Term<K>> ts(f.terms().begin(), f.terms().end());
    if (ord.kind() != MonomialOrder::Kind::Grevlex)
        std::sort(ts.begin(), ts.end(), [&](const Term<K>& a, const Term<K>& b) { return ord.greater(a.m, b.m); });
    return ts;
}

template <class K>
void make_monic(std::vector<Term<K>>& ts) {
    if (ts.empty() || ts.front().c.is_one()) return;
    K inv = ts.front().c.inverse();
    for (auto& t : ts) t.c *= inv;
}

/// Buchberger with normal pair selection and the Gebauer–Möller criteria.
template <class K>
class Engine {
  public:
    Engine(RingPtr ring, MonomialOrder ord, const Budget& budget)
        : ring_(std::move(ring)), ord_(ord), budget_(budget), pairs_(SPairLess{ord}) {}

    std::vector<Polynomial<K>> run(const std::vector<Polynomial<K>>& gens) {
        for (const auto& f : gens) {
            if (f.is_zero()) continue;
            auto ts = sorted_terms(f, ord_);
            make_monic(ts);
            add_element(std::move(ts));
        }
        std::uint64_t done = 0;
        while (!pairs_.empty()) {
            budget_.check(++done, elems_.size());
            SPair pr = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            auto sp = s_polynomial(pr.i, pr.j, pr.lcm);
            auto rem = reducer().reduce(sp);
            if (!rem.empty()) {
                make_monic(rem);
                add_element(std::move(rem));
            }
        }
        return reduced_basis();
    }

  private:
    struct Elem {
        std::vector<Term<K>> terms;
        Monomial lt;
        bool redundant = false;
    };
    struct SPair {
        std::size_t i, j;
        Monomial lcm;
    };
    struct SPairLess {
        MonomialOrder ord;
        bool operator()(const SPair& a, const SPair& b) const {
            if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
            int c = ord.compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    const Reducer<K>& reducer() {
        if (reducer_dirty_) {
            red_ = Reducer<K>(ring_, ord_);
            for (const auto& e : elems_) red_.add(e.terms);
            reducer_dirty_ = false;
        }
        return red_;
    }

    std::vector<Term<K>> s_polynomial(std::size_t i, std::size_t j, const Monomial& l) {
        const auto& f = elems_[i].terms;
        const auto& g = elems_[j].terms;
        Monomial qf = l / elems_[i].lt;
        Monomial qg = l / elems_[j].lt;
        std::map<Monomial, K, OrderDesc> acc{OrderDesc{ord_}};
        for (const auto& t : f) add_to(acc, t.m * qf, t.c);
        for (const auto& t : g) add_to(acc, t.m * qg, -t.c);
        std::vector<Term<K>> out;
        out.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) out.push_back({m, c});
        return out;
    }

    static void add_to(std::map<Monomial, K, OrderDesc>& acc, Monomial m, K c) {
        auto it = acc.find(m);
        if (it == acc.end())
            acc.emplace(std::move(m), std::move(c));
        else
            it->second += c;
    }

    void add_element(std::vector<Term<K>> terms) {
        Monomial lt = terms.front().m;
        std::size_t t = elems_.size();

        // candidate pairs with the new element
        struct Cand {
            std::size_t i;
            Monomial lcm;
            bool coprime;
            bool keep = true;
        };
        std::vector<Cand> cands;
        for (std::size_t i = 0; i < t; ++i) {
            if (elems_[i].redundant) continue;
            cands.push_back({i, elems_[i].lt.lcm(lt), elems_[i].lt.coprime(lt)});
        }
        // Gebauer-Moller M: drop candidates whose lcm is a proper multiple of another candidate's lcm
        for (auto& a : cands)
            for (const auto& b : cands) {
                if (&a == &b || !a.keep) continue;
                if (b.lcm != a.lcm && b.lcm.divides(a.lcm)) {
                    a.keep = false;
                    break;
                }
            }
        // F: one representative per lcm value; the whole class dies if any member is coprime
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (!cands[a].keep) continue;
            bool class_coprime = cands[a].coprime;
            for (std::size_t b = a + 1; b < cands.size(); ++b) {
                if (!cands[b].keep || cands[b].lcm != cands[a].lcm) continue;
                class_coprime = class_coprime || cands[b].coprime;
                cands[b].keep = false;
            }
            if (class_coprime) cands[a].keep = false;  // Buchberger's first criterion
        }
        // old-pair elimination
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            const SPair& p = *it;
            if (lt.divides(p.lcm) && elems_[p.i].lt.lcm(lt) != p.lcm && elems_[p.j].lt.lcm(lt) != p.lcm)
                it = pairs_.erase(it);
            else
                ++it;
        }
        // retire basis elements whose leading term the new one divides
        for (std::size_t i = 0; i < t; ++i)
            if (!elems_[i].redundant && lt.divides(elems_[i].lt)) elems_[i].redundant = true;

        elems_.push_back({std::move(terms), lt, false});
        reducer_dirty_ = true;
        for (const auto& c : cands)
            if (c.keep) pairs_.insert({c.i, t, c.lcm});
    }

    std::vector<Polynomial<K>> reduced_basis() {
        // pick elements with minimal leading terms, deterministically
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            bool minimal = true;
            for (std::size_t j = 0; j < elems_.size() && minimal; ++j) {
                if (i == j) continue;
                if (elems_[j].lt != elems_[i].lt && elems_[j].lt.divides(elems_[i].lt)) minimal = false;
                if (elems_[j].lt == elems_[i].lt && j < i) minimal = false;
            }
            if (minimal) keep.push_back(i);
        }
        std::vector<Polynomial<K>> out;
        for (std::size_t i : keep) {
            Reducer<K> others(ring_, ord_);
            for (std::size_t j : keep)
                if (j != i) others.add(elems_[j].terms);
            auto rem = others.reduce(elems_[i].terms);
            make_monic(rem);
            std::vector<Term<K>> ts(rem.begin(), rem.end());
            out.push_back(Polynomial<K>::from_terms(ring_, std::move(ts)));
        }
        std::sort(out.begin(), out.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
            return ord_.greater(b.leading_term(ord_).m, a.leading_term(ord_).m);
        });
        return out;
    }

    RingPtr ring_;
    MonomialOrder ord_;
    Budget budget_;
    std::vector<Elem> elems_;
    std::multiset<SPair, SPairLess> pairs_;
    Reducer<K> red_{nullptr, MonomialOrder::grevlex()};
    bool reducer_dirty_ = true;
};

}  // namespace gb_detail

/// Generator list plus a cache of reduced Groebner bases keyed by order.
template <class K>
class Ideal {
  public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial<K>> gens) : ring_(std::move(ring)) {
        for (auto& f : gens) {
            if (f.is_zero()) continue;
            require_same_ring(ring_, f.ring());
            gens_.push_back(std::move(f));
        }
    }

    Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {
        std::lock_guard<std::mutex> lk(o.mu_);
        cache_ = o.cache_;
    }
    Ideal& operator=(const Ideal& o) {
        if (this != &o) {
            ring_ = o.ring_;
            gens_ = o.gens_;
            std::lock_guard<std::mutex> lk(o.mu_);
            cache_ = o.cache_;
        }
        return *this;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial<K>>& generators() const { return gens_; }

    /// Ideal generated by this ideal's generators plus `extra`.
    Ideal with(std::vector<Polynomial<K>> extra) const {
        std::vector<Polynomial<K>> g = gens_;
        for (auto& f : extra) g.push_back(std::move(f));
        return Ideal(ring_, std::move(g));
    }

    const GroebnerBasis<K>& groebner(const MonomialOrder& ord, const Budget& budget = Budget()) const {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = cache_.find(ord);
            if (it != cache_.end()) return it->second;
        }
        gb_detail::Engine<K> eng(ring_, ord, budget);
        GroebnerBasis<K> gb{ring_, ord, eng.run(gens_)};
        std::lock_guard<std::mutex> lk(mu_);
        auto [it, fresh] = cache_.emplace(ord, std::move(gb));
        (void)fresh;  // concurrent insertion of the same key is idempotent
        return it->second;
    }

  private:
    RingPtr ring_;
    std::vector<Polynomial<K>> gens_;
    mutable std::mutex mu_;
    mutable std::map<MonomialOrder, GroebnerBasis<K>> cache_;
};

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& G) {
    require_same_ring(f.ring(), G.ring);
    gb_detail::Reducer<K> red(G.ring, G.order);
    for (const auto& g : G.elements) {
        auto ts = gb_detail::sorted_terms(g, G.order);
        gb_detail::make_monic(ts);
        red.add(std::move(ts));
    }
    auto rem = red.reduce(gb_detail::sorted_terms(f, G.order));
    return Polynomial<K>::from_terms(f.ring(), std::move(rem));
}

/// I ∩ k[x_block .. x_{n-1}], expressed in the smaller ring.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, std::size_t first_block_size, const Budget& budget = Budget()) {
    const Ring& R = *I.ring();
    if (first_block_size >= R.arity()) throw std::invalid_argument("elimination block must be smaller than the ring");
    if (first_block_size == 0) return I;
    const auto& gb = I.groebner(MonomialOrder::block_elim(first_block_size), budget);
    std::vector<std::string> rest(R.vars.begin() + first_block_size, R.vars.end());
    RingPtr small = make_ring(std::move(rest), R.field);
    std::vector<Polynomial<K>> out;
    for (const auto& g : gb.elements) {
        bool free_of_block = true;
        for (const auto& t : g.terms())
            for (std::size_t i = 0; i < first_block_size && free_of_block; ++i)
                if (t.m[i] != 0) free_of_block = false;
        if (!free_of_block) continue;
        std::vector<Term<K>> ts;
        for (const auto& t : g.terms()) {
            std::vector<std::uint16_t> e(t.m.exponents().begin() + first_block_size, t.m.exponents().end());
            ts.push_back({Monomial(std::move(e)), t.c});
        }
        out.push_back(Polynomial<K>::from_terms(small, std::move(ts)));
    }
    return Ideal<K>(small, std::move(out));
}

/// I : g^∞ via the fresh-variable trick: adjoin t, add t*g - 1, eliminate t.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Polynomial<K>& g, const Budget& budget = Budget()) {
    if (g.is_zero()) throw std::invalid_argument("cannot saturate by the zero polynomial");
    const Ring& R = *I.ring();
    std::vector<std::string> vars;
    std::string t = "t@sat";
    vars.push_back(t);
    vars.insert(vars.end(), R.vars.begin(), R.vars.end());
    RingPtr big = make_ring(std::move(vars), R.field);
    auto lift = [&](const Polynomial<K>& f) {
        std::vector<Term<K>> ts;
        for (const auto& tm : f.terms()) {
            std::vector<std::uint16_t> e;
            e.reserve(R.arity() + 1);
            e.push_back(0);
            e.insert(e.end(), tm.m.exponents().begin(), tm.m.exponents().end());
            ts.push_back({Monomial(std::move(e)), tm.c});
        }
        return Polynomial<K>::from_terms(big, std::move(ts));
    };
    std::vector<Polynomial<K>> gens;
    for (const auto& f : I.generators()) gens.push_back(lift(f));
    Polynomial<K> tg = Polynomial<K>::variable(big, 0) * lift(g) - Polynomial<K>::constant(big, 1);
    gens.push_back(std::move(tg));
    Ideal<K> big_ideal(big, std::move(gens));
    Ideal<K> elim = eliminate(big_ideal, 1, budget);
    // elim already lives in a ring with R's variable names
    std::vector<Polynomial<K>> out;
    for (const auto& f : elim.generators()) {
        std::vector<Term<K>> ts(f.terms().begin(), f.terms().end());
        out.push_back(Polynomial<K>::from_terms(I.ring(), std::move(ts)));
    }
    return Ideal<K>(I.ring(), std::move(out));
}

/// Monomials outside the leading-term ideal. Throws when infinite.
template <class K>
std::vector<Monomial> standard_monomials(const GroebnerBasis<K>& G, std::size_t limit = 1u << 20) {
    if (G.contains_one()) return {};
    const std::size_t n = G.ring->arity();
    auto lts = G.leading_terms();
    std::vector<std::uint32_t> bound(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        bool pure = false;
        for (const auto& m : lts) {
            bool only_v = m[v] > 0;
            for (std::size_t w = 0; w < n && only_v; ++w)
                if (w != v && m[w] != 0) only_v = false;
            if (only_v) {
                pure = true;
                bound[v] = std::max(bound[v], static_cast<std::uint32_t>(m[v]));
            }
        }
        if (!pure) throw NotZeroDimensional();
    }
    std::vector<Monomial> out;
    std::vector<std::uint16_t> cur(n, 0);
    // box enumeration below the pure-power bounds, filtered by the staircase
    std::size_t total = 1;
    for (std::size_t v = 0; v < n; ++v) total *= bound[v];  // upper bound on standard monomials
    (void)total;
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (out.size() > limit) throw std::runtime_error("standard monomial enumeration limit exceeded");
        if (v == n) {
            Monomial m{std::vector<std::uint16_t>(cur)};
            for (const auto& lt : lts)
                if (lt.divides(m)) return;
            out.push_back(std::move(m));
            return;
        }
        for (std::uint16_t e = 0; e < bound[v]; ++e) {
            cur[v] = e;
            rec(v + 1);
        }
        cur[v] = 0;
    };
    rec(0);
    return out;
}

/// dim_k of the quotient ring of a zero-dimensional affine ideal;
/// solution count with multiplicity.
template <class K>
std::size_t count_points(const Ideal<K>& I, const Budget& budget = Budget(),
                         const MonomialOrder& ord = MonomialOrder::grevlex()) {
    return standard_monomials(I.groebner(ord, budget)).size();
}

/// Squarefree-eliminant probabilistic radicality certificate for a
/// zero-dimensional ideal. A `true` answer is a certificate; `false` may be a
/// missed generic choice, so several random forms are tried.
template <class K>
bool is_radical_zero_dim(const Ideal<K>& I, Rng rng, const Budget& budget = Budget(), int attempts = 4) {
    const auto& gb = I.groebner(MonomialOrder::grevlex(), budget);
    auto basis = standard_monomials(gb);
    const std::size_t n = basis.size();
    if (n == 0) throw NotZeroDimensional();  // unit ideal has no points; treat as misuse
    const Ring& R = *I.ring();

    std::map<Monomial, std::size_t, OrderDesc> index{OrderDesc{MonomialOrder::grevlex()}};
    for (std::size_t i = 0; i < n; ++i) index.emplace(basis[i], i);

    auto nf_column = [&](const Polynomial<K>& f) {
        std::vector<K> col(n, field_ops<K>::zero(R));
        Polynomial<K> r = normal_form(f, gb);
        for (const auto& t : r.terms()) col[index.at(t.m)] += t.c;
        return col;
    };

    for (int attempt = 0; attempt < attempts; ++attempt) {
        // random linear form
        Polynomial<K> ell = Polynomial<K>::zero(I.ring());
        for (std::size_t v = 0; v < R.arity(); ++v) {
            std::int64_t c = R.field.kind == FieldDesc::Kind::Prime ? rng.mod(R.field.p)
                                                                    : static_cast<std::int64_t>(rng.mod(2003)) - 1001;
            ell += Polynomial<K>::variable(I.ring(), v).scaled(field_ops<K>::from_int(R, c));
        }
        // multiplication matrix columns: M[:,j] = NF(ell * basis[j])
        Matrix<K> M(n, n, field_ops<K>::zero(R));
        for (std::size_t j = 0; j < n; ++j) {
            auto col = nf_column(ell * Polynomial<K>::monomial(I.ring(), basis[j], field_ops<K>::one(R)));
            for (std::size_t i = 0; i < n; ++i) M.at(i, j) = col[i];
        }
        // Krylov minimal polynomial of the vector 1
        std::vector<std::vector<K>> rows;      // echelonized Krylov vectors
        std::vector<std::vector<K>> combos;    // expressions in terms of v_0..v_k
        std::vector<std::size_t> pivots;
        std::vector<K> v(n, field_ops<K>::zero(R));
        v[index.at(Monomial(R.arity()))] = field_ops<K>::one(R);
        std::vector<K> minpoly;
        for (std::size_t k = 0; k <= n; ++k) {
            std::vector<K> row = v;
            std::vector<K> combo(n + 2, field_ops<K>::zero(R));
            combo[k] = field_ops<K>::one(R);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const K& f = row[pivots[r]];
                if (f.is_zero()) continue;
                K fc = f;
                for (std::size_t c = 0; c < n; ++c) row[c] -= fc * rows[r][c];
                for (std::size_t c = 0; c < combos[r].size(); ++c) combo[c] -= fc * combos[r][c];
            }
            std::size_t piv = n;
            for (std::size_t c = 0; c < n; ++c)
                if (!row[c].is_zero()) {
                    piv = c;
                    break;
                }
            if (piv == n) {
                minpoly.assign(combo.begin(), combo.begin() + k + 1);
                break;
            }
            K inv = row[piv].inverse();
            for (auto& x : row) x *= inv;
            for (auto& x : combo) x *= inv;
            rows.push_back(std::move(row));
            combos.push_back(std::move(combo));
            pivots.push_back(piv);
            // v <- M v
            std::vector<K> nv(n, field_ops<K>::zero(R));
            for (std::size_t j = 0; j < n; ++j) {
                if (v[j].is_zero()) continue;
                for (std::size_t i = 0; i < n; ++i) nv[i] += M.at(i, j) * v[j];
            }
            v = std::move(nv);
        }
        while (!minpoly.empty() && minpoly.back().is_zero()) minpoly.pop_back();
        if (minpoly.size() != n + 1) continue;  // eliminant degree below dim: inconclusive choice
        // squarefree test: gcd(f, f') constant
        std::vector<K> deriv;
        for (std::size_t i = 1; i < minpoly.size(); ++i)
            deriv.push_back(minpoly[i] * field_ops<K>::from_int(R, static_cast<std::int64_t>(i)));
        auto g = unipoly_gcd(minpoly, deriv);
        if (g.size() == 1) return true;
        return false;  // eliminant of full degree but not squarefree: multiple point
    }
    return false;
}

}  // namespace fano
