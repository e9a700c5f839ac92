#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace fano {

struct ExponentOverflow : std::overflow_error {
    ExponentOverflow() : std::overflow_error("monomial exponent overflow") {}
};

/// Exponent vector with cached total degree.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : e_(arity, 0), deg_(0) {}
    explicit Monomial(std::vector<std::uint16_t> exps) : e_(std::move(exps)) {
        deg_ = 0;
        for (auto x : e_) deg_ += x;
    }

    std::size_t arity() const { return e_.size(); }
    std::uint32_t degree() const { return deg_; }
    std::uint16_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint16_t>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            std::uint32_t s = std::uint32_t(r.e_[i]) + o.e_[i];
            if (s > 0xffff) throw ExponentOverflow();
            r.e_[i] = static_cast<std::uint16_t>(s);
        }
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// this / o, requires o.divides(*this)
    Monomial operator/(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        r.deg_ = deg_ - o.deg_;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(*this);
        r.deg_ = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = std::max(e_[i], o.e_[i]);
            r.deg_ += r.e_[i];
        }
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] && o.e_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    static Monomial variable(std::size_t arity, std::size_t i, std::uint16_t k = 1) {
        Monomial m(arity);
        m.e_[i] = k;
        m.deg_ = k;
        return m;
    }

  private:
    std::vector<std::uint16_t> e_;
    std::uint32_t deg_ = 0;
};

}  // namespace fano
