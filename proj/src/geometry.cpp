#include "fano/geometry.hpp"

#include <functional>

namespace fano {

const std::vector<std::string>& scroll_labels() {
    static const std::vector<std::string> labels{"00", "01", "02", "10", "11", "12"};
    return labels;
}

std::size_t plucker_pair_index(std::size_t a, std::size_t b) {
    if (a >= b || b > 5) throw std::invalid_argument("plucker pair requires 0 <= a < b <= 5");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            if (i == a && j == b) return idx;
            ++idx;
        }
    throw std::logic_error("unreachable");
}

std::pair<std::size_t, std::size_t> plucker_pair(std::size_t index) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            if (idx == index) return {i, j};
            ++idx;
        }
    throw std::invalid_argument("plucker index out of range");
}

std::vector<std::string> plucker_variable_names() {
    const auto& labels = scroll_labels();
    std::vector<std::string> vars;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = a + 1; b < 6; ++b) vars.push_back("p" + labels[a] + "_" + labels[b]);
    return vars;
}

RingPtr plucker_ring(FieldDesc field) { return make_ring(plucker_variable_names(), field); }

RingPtr p5_ring(FieldDesc field) {
    std::vector<std::string> vars;
    for (const auto& l : scroll_labels()) vars.push_back("z" + l);
    return make_ring(std::move(vars), field);
}

int permutation_sign(const std::vector<std::size_t>& perm) {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) sign = -sign;
    return sign;
}

namespace geometry_detail {

std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint16_t d) {
    std::vector<Monomial> out;
    std::vector<std::uint16_t> cur(arity, 0);
    std::function<void(std::size_t, std::uint16_t)> rec = [&](std::size_t pos, std::uint16_t rem) {
        if (pos + 1 == arity) {
            cur[pos] = rem;
            out.push_back(Monomial{std::vector<std::uint16_t>(cur)});
            return;
        }
        for (std::uint16_t e = 0; e <= rem; ++e) {
            cur[pos] = static_cast<std::uint16_t>(rem - e);
            rec(pos + 1, e);
        }
    };
    rec(0, d);
    return out;
}

std::vector<std::vector<std::size_t>> subsets_of_six(std::size_t size) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t next) {
        if (cur.size() == size) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = next; v < 6; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace geometry_detail

}  // namespace fano
