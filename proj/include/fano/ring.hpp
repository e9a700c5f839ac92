#pragma once

#include "fano/field.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace fano {

struct RingMismatch : std::runtime_error {
    explicit RingMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ArityMismatch : std::runtime_error {
    explicit ArityMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct FieldDesc {
    enum class Kind { Rationals, Prime } kind = Kind::Prime;
    std::uint32_t p = 32003;

    static FieldDesc rationals() { return {Kind::Rationals, 0}; }
    static FieldDesc prime(std::uint32_t p) {
        if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
        return {Kind::Prime, p};
    }

    bool operator==(const FieldDesc& o) const { return kind == o.kind && p == o.p; }

    std::string str() const { return kind == Kind::Rationals ? "QQ" : "Fp:" + std::to_string(p); }
};

/// Variable names plus coefficient field. Shared immutable.
struct Ring {
    std::vector<std::string> vars;
    FieldDesc field;

    std::size_t arity() const { return vars.size(); }

    std::size_t var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        throw std::invalid_argument("unknown variable: " + name);
    }
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars, FieldDesc field) {
    return std::make_shared<const Ring>(Ring{std::move(vars), field});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    return a && b && a->vars == b->vars && a->field == b->field;
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw RingMismatch("polynomials live in different rings");
}

template <class K>
struct field_ops;

template <>
struct field_ops<Fp> {
    static Fp zero(const Ring& r) { return Fp::zero(r.field.p); }
    static Fp one(const Ring& r) { return Fp::one(r.field.p); }
    static Fp from_int(const Ring& r, std::int64_t n) { return Fp(n, r.field.p); }
};

template <>
struct field_ops<Rational> {
    static Rational zero(const Ring&) { return Rational::zero(); }
    static Rational one(const Ring&) { return Rational::one(); }
    static Rational from_int(const Ring&, std::int64_t n) { return Rational(n); }
};

}  // namespace fano
