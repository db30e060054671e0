#include "steenrod/polynomial.hpp"

#include "steenrod/errors.hpp"

#include <algorithm>
#include <functional>

namespace steenrod {

namespace {

void trim(Polynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Positive divisors of |n|, n != 0.
std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (divides(d, n)) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Newton interpolation through (x_i, y_i); false unless all coefficients are integers.
bool interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys, Polynomial& out) {
    const std::size_t n = xs.size();
    std::vector<mpq_class> coef(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / mpq_class(xs[i] - xs[i - level]);
            if (i == level) break;
        }
    }
    // expand the Newton form
    std::vector<mpq_class> poly(1, coef[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        std::vector<mpq_class> next(poly.size() + 1);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * mpq_class(xs[k]);
        }
        next[0] += coef[k];
        poly = std::move(next);
    }
    out.clear();
    for (auto& c : poly) {
        c.canonicalize();
        if (c.get_den() != 1) return false;
        out.push_back(c.get_num());
    }
    trim(out);
    return true;
}

// A monic factor of degree d of the monic f, if one exists.
bool find_factor(const Polynomial& f, int d, Polynomial& factor) {
    std::vector<Integer> xs, vals;
    std::vector<std::vector<Integer>> divs;
    for (long k = 0; xs.size() < static_cast<std::size_t>(d + 1); ++k) {
        const Integer a = (k % 2 == 0) ? Integer(k / 2) : Integer(-(k + 1) / 2);
        const Integer v = evaluate(f, a);
        if (v == 0) {
            factor = {-a, Integer(1)};
            return true;
        }
        xs.push_back(a);
        vals.push_back(v);
        divs.push_back(divisors(v));
    }
    std::vector<Integer> ys(xs.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == xs.size()) {
            Polynomial g, q;
            if (!interpolate(xs, ys, g)) return false;
            if (degree(g) != d || g.back() != 1) return false;
            if (!divide_exact(f, g, q)) return false;
            factor = std::move(g);
            return true;
        }
        for (const auto& dv : divs[i]) {
            for (int s : {1, -1}) {
                ys[i] = s * dv;
                if (rec(i + 1)) return true;
            }
        }
        return false;
    };
    return rec(0);
}

}  // namespace

int degree(const Polynomial& p) { return static_cast<int>(p.size()) - 1; }

Integer evaluate(const Polynomial& p, const Integer& x) {
    Integer v = 0;
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) addmul(out[i + j], a[i], b[j]);
    trim(out);
    return out;
}

bool divide_exact(const Polynomial& a, const Polynomial& b, Polynomial& quotient) {
    if (b.empty()) throw ValidationError("polynomial division by zero");
    Polynomial r = a;
    trim(r);
    if (r.size() < b.size()) {
        quotient.clear();
        return r.empty();
    }
    Polynomial q(r.size() - b.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        const Integer& top = r[k + b.size() - 1];
        if (!divides(b.back(), top)) return false;
        q[k] = top / b.back();
        for (std::size_t j = 0; j < b.size(); ++j) submul(r[k + j], q[k], b[j]);
    }
    trim(r);
    if (!r.empty()) return false;
    trim(q);
    quotient = std::move(q);
    return true;
}

Polynomial characteristic_polynomial(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    Polynomial c(n + 1);
    c[n] = 1;
    IntMatrix mk(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix next = m * mk;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        mk = std::move(next);
        IntMatrix prod = m * mk;
        Integer tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
        Integer q;
        mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = -q;
    }
    return c;
}

std::vector<Polynomial> factor_monic(const Polynomial& p) {
    Polynomial f = p;
    trim(f);
    if (f.empty() || f.back() != 1) throw ValidationError("factor_monic needs a monic polynomial");
    std::vector<Polynomial> out;
    while (degree(f) >= 1 && f[0] == 0) {
        out.push_back({Integer(0), Integer(1)});
        f.erase(f.begin());
    }
    std::vector<Polynomial> work;
    if (degree(f) >= 1) work.push_back(f);
    while (!work.empty()) {
        Polynomial g = std::move(work.back());
        work.pop_back();
        bool split = false;
        for (int d = 1; d <= degree(g) / 2 && !split; ++d) {
            Polynomial h, q;
            if (find_factor(g, d, h)) {
                divide_exact(g, h, q);
                work.push_back(std::move(h));
                work.push_back(std::move(q));
                split = true;
            }
        }
        if (!split) out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return out;
}

}  // namespace steenrod
