#include "stdiv/pq_engine.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace stdiv {

namespace {

// superdiagonal coefficient of M_{r',x} at offset d >= 1: (-1)^(d-1)/d
Rat super_coeff(long d) { return Rat(d % 2 == 1 ? 1 : -1, d); }

Poly<Rat> poly_x() { return Poly<Rat>({Rat(0), Rat(1)}); }

std::vector<std::vector<Poly<Rat>>> minor_of(const std::vector<std::vector<Poly<Rat>>>& a, long row,
                                             long col) {
    long n = static_cast<long>(a.size());
    std::vector<std::vector<Poly<Rat>>> m;
    for (long i = 0; i < n; ++i) {
        if (i == row) continue;
        std::vector<Poly<Rat>> r;
        for (long j = 0; j < n; ++j) {
            if (j == col) continue;
            r.push_back(a[i][j]);
        }
        m.push_back(std::move(r));
    }
    return m;
}

// adj(A)[i][j] = (-1)^(i+j) det(A with row j, col i removed)
std::vector<std::vector<Poly<Rat>>> poly_adjugate(const std::vector<std::vector<Poly<Rat>>>& a) {
    long n = static_cast<long>(a.size());
    std::vector<std::vector<Poly<Rat>>> adj(n, std::vector<Poly<Rat>>(n));
    if (n == 1) {
        adj[0][0] = Poly<Rat>::constant(Rat(1));
        return adj;
    }
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Poly<Rat> d = poly_det(minor_of(a, j, i));
            adj[i][j] = ((i + j) % 2 == 0) ? d : -d;
        }
    return adj;
}

// B_{k,x}: rows 0..k-1, columns r'-k..r'-1 of M_{r',x}
std::vector<std::vector<Poly<Rat>>> block_B(long r, long k) {
    auto M = build_matrix(r);
    std::vector<std::vector<Poly<Rat>>> B(k, std::vector<Poly<Rat>>(k));
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) B[i][j] = M[i][r - k + j];
    return B;
}

// A_{k,x}: rows 0..k-1, columns 0..r'-k-1 of M_{r',x}
std::vector<std::vector<Poly<Rat>>> block_A(long r, long k) {
    auto M = build_matrix(r);
    std::vector<std::vector<Poly<Rat>>> A(k, std::vector<Poly<Rat>>(r - k));
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < r - k; ++j) A[i][j] = M[i][j];
    return A;
}

PQTable compute_table(long r, long k) {
    if (r < 1) throw std::invalid_argument("weight must be >= 1");
    if (k < 0 || k > r) throw std::invalid_argument("case index out of range");
    PQTable t;
    t.r = r;
    t.k = k;
    t.m = r / 2;
    t.P.resize(r);
    t.Q.resize(r);

    const BiPoly xpTf = BiPoly::x_power(1) + BiPoly::from_T(f_series(r).shifted(1));

    if (k == 0) {
        t.d = Poly<Rat>::constant(Rat(1));
        t.det_B_k0 = Rat(1);
        t.singular_at_x0 = false;
        for (long i = 0; i < r; ++i) {
            t.P[i] = BiPoly::from_T(Poly<Rat>::monomial(Rat(1), i));
            t.Q[i] = (t.P[i] * xpTf).truncate_T(r - 1);
        }
        return t;
    }

    auto B = block_B(r, k);
    Poly<Rat> detB = poly_det(B);
    auto adjB = poly_adjugate(B);

    // d_k(x) = (-1)^{r'(k-1)} det(B_{k,x}) / det(B_{r'-k,0}); for k <= m the
    // block is constant and we keep d_k = 1 instead.
    Rat det_rk0 = (r - k == 0) ? Rat(1) : poly_det(block_B(r, r - k))(Rat(0));
    if (det_rk0 == 0) throw std::logic_error("det(B_{r'-k,0}) vanished unexpectedly");
    Rat sign = (r * (k - 1)) % 2 == 0 ? Rat(1) : Rat(-1);

    bool normalized = k > t.m;
    Rat scale;  // Ptilde = scale * (adjugate-based numerator)
    if (normalized) {
        t.d = sign * (Rat(1) / det_rk0) * detB;
        scale = sign / det_rk0;
    } else {
        if (detB.degree() != 0) throw std::logic_error("B_{k,x} should be constant for k <= m");
        t.d = Poly<Rat>::constant(Rat(1));
        scale = Rat(1) / detB.coeff(0);
    }
    t.det_B_k0 = detB(Rat(0));
    t.singular_at_x0 = (t.det_B_k0 == 0);

    auto A = block_A(r, k);

    for (long i = 0; i < r; ++i) {
        BiPoly num;  // scale * num is d_k * (B^{-1}-part of P_{k,i})
        if (i <= k - 1) {
            // P_{k,i} = [T^{k-1} ... 1] B^{-1} e'_{k-i}
            long col = k - i - 1;
            std::vector<Poly<Rat>> slices;  // collect as x-slices via Poly-in-x times T-monomial
            BiPoly acc;
            for (long row = 0; row < k; ++row) {
                const Poly<Rat>& w = adjB[row][col];  // polynomial in x
                if (w.is_zero()) continue;
                std::vector<Poly<Rat>> sl(static_cast<std::size_t>(w.degree()) + 1);
                for (long s = 0; s <= w.degree(); ++s)
                    sl[static_cast<std::size_t>(s)] = Poly<Rat>::monomial(w.coeff(s), k - 1 - row);
                acc = acc + BiPoly(std::move(sl));
            }
            t.P[i] = scale * acc;
        } else {
            // P_{k,i} = T^i - [T^{k-1} ... 1] B^{-1} A e''_{r'-i}
            long col = r - i - 1;  // column of A
            BiPoly acc;
            for (long row = 0; row < k; ++row) {
                Poly<Rat> w;  // (adj(B) * A-col)[row], polynomial in x
                for (long s = 0; s < k; ++s) w = w + adjB[row][s] * A[s][col];
                if (w.is_zero()) continue;
                std::vector<Poly<Rat>> sl(static_cast<std::size_t>(w.degree()) + 1);
                for (long ds = 0; ds <= w.degree(); ++ds)
                    sl[static_cast<std::size_t>(ds)] = Poly<Rat>::monomial(w.coeff(ds), k - 1 - row);
                acc = acc + BiPoly(std::move(sl));
            }
            BiPoly dTi;  // d_k(x) * T^i
            {
                std::vector<Poly<Rat>> sl(static_cast<std::size_t>(t.d.degree()) + 1);
                for (long s = 0; s <= t.d.degree(); ++s)
                    sl[static_cast<std::size_t>(s)] = Poly<Rat>::monomial(t.d.coeff(s), i);
                dTi = BiPoly(std::move(sl));
            }
            t.P[i] = dTi - scale * acc;
        }
        t.Q[i] = (t.P[i] * xpTf).truncate_T(r - 1);
    }
    return t;
}

std::map<std::pair<long, long>, PQTable> g_cache;
std::shared_mutex g_cache_mutex;

}  // namespace

std::vector<std::vector<Poly<Rat>>> build_matrix(long r) {
    if (r < 1) throw std::invalid_argument("weight must be >= 1");
    std::vector<std::vector<Poly<Rat>>> M(r, std::vector<Poly<Rat>>(r));
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) {
            if (i == j)
                M[i][j] = poly_x();
            else if (j > i)
                M[i][j] = Poly<Rat>::constant(super_coeff(j - i));
            else
                M[i][j] = Poly<Rat>();
        }
    return M;
}

std::vector<std::vector<Rat>> build_matrix_at(long r, const Rat& x) {
    auto M = build_matrix(r);
    std::vector<std::vector<Rat>> out(r, std::vector<Rat>(r));
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) out[i][j] = M[i][j](x);
    return out;
}

Poly<Rat> poly_det(std::vector<std::vector<Poly<Rat>>> a) {
    long n = static_cast<long>(a.size());
    if (n == 0) return Poly<Rat>::constant(Rat(1));
    int sign = 1;
    Poly<Rat> prev = Poly<Rat>::constant(Rat(1));
    for (long c = 0; c + 1 < n; ++c) {
        if (a[c][c].is_zero()) {
            long piv = -1;
            for (long r2 = c + 1; r2 < n; ++r2)
                if (!a[r2][c].is_zero()) {
                    piv = r2;
                    break;
                }
            if (piv < 0) return Poly<Rat>();
            std::swap(a[c], a[piv]);
            sign = -sign;
        }
        for (long i = c + 1; i < n; ++i) {
            for (long j = c + 1; j < n; ++j)
                a[i][j] = divide_exact(a[c][c] * a[i][j] - a[i][c] * a[c][j], prev);
            a[i][c] = Poly<Rat>();
        }
        prev = a[c][c];
    }
    return sign == 1 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

const PQTable& pq_table(long r, long k) {
    {
        std::shared_lock lk(g_cache_mutex);
        auto it = g_cache.find({r, k});
        if (it != g_cache.end()) return it->second;
    }
    PQTable t = compute_table(r, k);
    std::unique_lock lk(g_cache_mutex);
    return g_cache.emplace(std::make_pair(r, k), std::move(t)).first->second;
}

Poly<Rat> PQTable::P_at(long i, const Rat& x0) const {
    Rat dv = d(x0);
    if (dv == 0) throw std::domain_error("singular block: d_k vanishes at this x");
    return (Rat(1) / dv) * P[static_cast<std::size_t>(i)].at_x(x0);
}

Poly<Rat> PQTable::Q_at(long i, const Rat& x0) const {
    Rat dv = d(x0);
    if (dv == 0) throw std::domain_error("singular block: d_k vanishes at this x");
    return (Rat(1) / dv) * Q[static_cast<std::size_t>(i)].at_x(x0);
}

Rat a_value(long r, long k) {
    long m = r / 2;
    if (k < 1 || k > m + 1) throw std::invalid_argument("a_k defined for 1 <= k <= m+1");
    if (r == 1 && k == 1) throw std::domain_error("a_1(0) undefined at weight 1");
    const PQTable& t = pq_table(r, k);
    if (t.d(Rat(0)) == 0) throw std::domain_error("singular block at x = 0");
    return t.P_at(0, Rat(0)).coeff(k - 1);
}

Rat p_at_minus1(long r, long k) {
    long m = r / 2;
    if (k < 1 || k > m) throw std::invalid_argument("P_{k,0}(-1,0) closed form needs 1 <= k <= m");
    Rat v = factorial(r - k) / (factorial(r - 2 * k) * factorial(k - 1));
    return (r % 2 == 0) ? v : -v;
}

Rat p_mm_at_minus1(long r) {
    if (r % 2 != 0 || r < 2) throw std::invalid_argument("even weight required");
    long m = r / 2;
    return -Rat(m) * (harmonic(m) + harmonic(m - 1));
}

Rat delta_at_minus1(long r, long l) {
    long m = r / 2;
    if (l < 1 || 2 * l > r + 1) throw std::invalid_argument("constant delta branch needs 1 <= l <= (r+1)/2");
    (void)m;
    return -harmonic(r - l) - harmonic(l - 1);
}

bool delta_needs_x(long r, long l) { return l == 0 || (r % 2 == 0 && l == r / 2 + 1); }

ExactElement delta_at_minus1(long r, long l, const ExactElement& x) {
    long m = r / 2;
    if (l == 0) return -x;
    if (l == m + 1 && r == 2 * m) {
        Rat h = harmonic(m) + harmonic(m - 1);
        ExactElement den = (x + ExactElement::from_rat(h, x.ramification(), x.prime())) * Rat(m * m);
        if (den.is_zero()) throw std::domain_error("delta pole: x = -H_m - H_{m-1}");
        return ExactElement::from_rat(-h, x.ramification(), x.prime()) + den.inverse();
    }
    return ExactElement::from_rat(delta_at_minus1(r, l), x.ramification(), x.prime());
}

Rat delta_dot_at_minus1(long r, long l) {
    if (l < 1 || 2 * l >= r + 2) throw std::invalid_argument("delta-dot formula needs 1 <= l < r/2 + 1");
    return Rat(r) * (2 * l - 1) - Rat(2 * l) * (l - 1) - 1;
}

Rat delta_dot_residue(long r, long l) {
    long m = r / 2;
    if (l == 0) return Rat(0);
    if (r % 2 == 0 && l == m + 1) return delta_dot_at_minus1(r, m);
    return delta_dot_at_minus1(r, l);
}

Rat b_value(long r, long k) {
    if (r == 3 && k == 3) return Rat(-5, 4);
    if (r % 2 == 1 && r >= 3) {
        long m = (r - 1) / 2;
        if (k == m + 2) return -Rat(2 * m * m + 2 * m + 1) / Rat(m * m * (m + 1) * (m + 1));
    }
    return Rat(0);
}

}  // namespace stdiv
