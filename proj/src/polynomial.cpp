#include "nesto/polynomial.hpp"

#include <algorithm>
#include <string>

namespace nesto {

namespace {

void trim(IntVec& v) {
    while (v.size() > 1 && v.back() == 0) v.pop_back();
}

}  // namespace

std::string vector_str(const IntVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

IntVec poly_add(const IntVec& a, const IntVec& b) {
    IntVec r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

IntVec poly_mul(const IntVec& a, const IntVec& b) {
    if (a.empty() || b.empty()) return {};
    IntVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

IntVec poly_shift(const IntVec& a, int k) {
    IntVec r(static_cast<size_t>(k), 0);
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

IntVec binomial_power(int k) {
    IntVec r{1};
    for (int i = 0; i < k; ++i) r = poly_mul(r, IntVec{1, 1});
    return r;
}

IntVec f_to_h(const IntVec& f) {
    // h(t) = f(t-1): accumulate f_i (t-1)^i.
    IntVec h(f.size(), 0);
    IntVec power{1};  // (t-1)^i
    for (size_t i = 0; i < f.size(); ++i) {
        for (size_t j = 0; j < power.size(); ++j) h[j] += f[i] * power[j];
        power = poly_mul(power, IntVec{-1, 1});
    }
    return h;
}

bool palindromic(const IntVec& v) {
    for (size_t i = 0, j = v.size(); i < j; ++i)
        if (v[i] != v[v.size() - 1 - i]) return false;
    return true;
}

IntVec h_to_gamma(const IntVec& h) {
    if (h.empty()) throw input_error("h_to_gamma: empty vector");
    if (!palindromic(h))
        throw not_simple_error("h-vector " + vector_str(h) + " is not palindromic");
    int n = static_cast<int>(h.size()) - 1;
    IntVec rem = h;
    IntVec gamma(static_cast<size_t>(n / 2) + 1, 0);
    for (int i = 0; i <= n / 2; ++i) {
        long long g = rem[static_cast<size_t>(i)];
        gamma[static_cast<size_t>(i)] = g;
        if (g == 0) continue;
        IntVec term = poly_shift(binomial_power(n - 2 * i), i);
        for (size_t j = 0; j < term.size(); ++j) rem[j] -= g * term[j];
    }
    trim(rem);
    if (rem != IntVec{0})
        throw consistency_error("gamma extraction left remainder " + vector_str(rem));
    return gamma;
}

PolynomialBundle polynomial_bundle(const IntVec& f) {
    if (f.empty()) throw input_error("polynomial_bundle: empty f-vector");
    if (f.back() != 1)
        throw input_error("polynomial_bundle: top face count must be 1, got " + vector_str(f));
    PolynomialBundle bundle;
    bundle.f = f;
    bundle.h = f_to_h(f);
    bundle.gamma = h_to_gamma(bundle.h);
    size_t n = f.size() - 1;
    bundle.H2.assign(n + 1, IntVec(n + 1, 0));
    for (size_t i = 0; i <= n; ++i) bundle.H2[n - i][i] = bundle.h[i];
    return bundle;
}

IntVec f_simplex(int m) {
    if (m < 0) throw input_error("f_simplex: dimension must be >= 0");
    // f_i = C(m+1, i+1) for i < m; f_m = 1.
    IntVec f(static_cast<size_t>(m) + 1, 0);
    long long binom = static_cast<long long>(m) + 1;  // C(m+1, 1)
    for (int i = 0; i < m; ++i) {
        f[static_cast<size_t>(i)] = binom;
        binom = binom * (m - i) / (i + 2);
    }
    f[static_cast<size_t>(m)] = 1;
    return f;
}

IntVec gamma_simplex(int m) {
    if (m <= 0) return {1};
    // h(simplex) = 1 + t + ... + t^m.
    return h_to_gamma(IntVec(static_cast<size_t>(m) + 1, 1));
}

}  // namespace nesto
