#include "zpoly.hpp"

#include <limits>
#include <stdexcept>

namespace zplusi::detail {

void znorm(ZVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZVec zadd(const ZVec& a, const ZVec& b) {
    ZVec r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    znorm(r);
    return r;
}

ZVec zsub(const ZVec& a, const ZVec& b) {
    ZVec r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    znorm(r);
    return r;
}

ZVec zneg(ZVec a) {
    for (auto& c : a) c = -c;
    return a;
}

ZVec zmul(const ZVec& a, const ZVec& b) {
    if (a.empty() || b.empty()) return {};
    ZVec r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    // top coefficient = lc(a)*lc(b) != 0, already normalized
    return r;
}

ZVec zmul_scalar(ZVec a, const mpz_class& s) {
    if (s == 0) return {};
    for (auto& c : a) c *= s;
    return a;
}

mpz_class zcontent(const ZVec& a) {
    mpz_class c = 0;
    for (const auto& x : a) {
        if (x == 0) continue;
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
        if (c == 1) break;
    }
    return c;
}

ZVec zprimitive(const ZVec& a) {
    if (a.empty()) return {};
    mpz_class c = zcontent(a);
    if (a.back() < 0) c = -c;
    ZVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
    return r;
}

std::optional<ZVec> zdivexact(const ZVec& a, const ZVec& b) {
    if (b.empty()) throw std::logic_error("zdivexact by zero");
    if (a.empty()) return ZVec{};
    const long db = zdeg(b);
    if (zdeg(a) < db) return std::nullopt;
    const mpz_class& lb = b.back();
    ZVec r = a;
    const long dq = zdeg(a) - db;
    ZVec q(dq + 1);
    for (long i = dq; i >= 0; --i) {
        mpz_class& top = r[i + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (long k = 0; k <= db; ++k)
            mpz_submul(r[i + k].get_mpz_t(), q[i].get_mpz_t(), b[k].get_mpz_t());
    }
    for (long k = 0; k < db; ++k)
        if (r[k] != 0) return std::nullopt;
    return q;
}

mpz_class zeval(const ZVec& a, const mpz_class& point) {
    if (a.empty()) return 0;
    mpz_class r = a.back();
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        r *= point;
        r += a[i];
    }
    return r;
}

// ---------------------------------------------------------------------------
// 64-bit prime machinery
// ---------------------------------------------------------------------------

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 base, u64 e, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Dense polynomial over F_p, ascending, normalized.
using MVec = std::vector<u64>;

void mnorm(MVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

MVec reduce_mod(const ZVec& a, u64 p) {
    MVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 m = mpz_fdiv_ui(a[i].get_mpz_t(), p);
        r[i] = m;
    }
    mnorm(r);
    return r;
}

// a := a mod b (b nonzero): repeatedly cancel the leading term of a.
void mod_rem_inplace(MVec& a, const MVec& b, u64 p) {
    const std::size_t db = b.size() - 1;
    const u64 binv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        const u64 c = mulmod(a.back(), binv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < db; ++i) {
            u64 t = mulmod(c, b[i], p);
            u64& dst = a[shift + i];
            dst = (dst >= t) ? dst - t : dst + p - t;
        }
        a.pop_back();  // the leading term cancels exactly
        mnorm(a);
    }
}

MVec gcd_mod(MVec a, MVec b, u64 p) {
    while (!b.empty()) {
        mod_rem_inplace(a, b, p);
        std::swap(a, b);
    }
    if (!a.empty()) {
        const u64 inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

}  // namespace

std::uint64_t nth_modular_prime(std::size_t i) {
    static std::vector<u64> cache;
    static u64 next_candidate = (1ULL << 62) + 1;
    while (cache.size() <= i) {
        while (!is_prime_u64(next_candidate)) next_candidate += 2;
        cache.push_back(next_candidate);
        next_candidate += 2;
    }
    return cache[i];
}

std::optional<MVec> zreduce_rational_mod(const ZVec& num, const mpz_class& den, std::uint64_t p) {
    const u64 d = mpz_fdiv_ui(den.get_mpz_t(), p);
    if (d == 0) return std::nullopt;
    MVec r = reduce_mod(num, p);
    if (d != 1) {
        const u64 s = invmod(d, p);
        for (auto& c : r) c = mulmod(c, s, p);
    }
    return r;
}

MVec mpoly_add(const MVec& a, const MVec& b, std::uint64_t p) {
    MVec r = a.size() >= b.size() ? a : b;
    const MVec& small = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < small.size(); ++i) {
        r[i] += small[i];
        if (r[i] >= p) r[i] -= p;
    }
    mnorm(r);
    return r;
}

MVec mpoly_mul(const MVec& a, const MVec& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    MVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<u64>((static_cast<u128>(a[i]) * b[j] + r[i + j]) % p);
    }
    mnorm(r);
    return r;
}

std::optional<long> zgcd_degree_mod(const ZVec& a, const ZVec& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return std::nullopt;
    const bool lcA = mpz_fdiv_ui(a.back().get_mpz_t(), p) != 0;
    const bool lcB = mpz_fdiv_ui(b.back().get_mpz_t(), p) != 0;
    if (!lcA && !lcB) return std::nullopt;
    MVec ra = reduce_mod(a, p), rb = reduce_mod(b, p);
    if (ra.empty() && rb.empty()) return std::nullopt;
    if (ra.empty()) return static_cast<long>(rb.size()) - 1;
    if (rb.empty()) return static_cast<long>(ra.size()) - 1;
    MVec g = gcd_mod(std::move(ra), std::move(rb), p);
    return static_cast<long>(g.size()) - 1;
}

// ---------------------------------------------------------------------------
// subresultant PRS
// ---------------------------------------------------------------------------

namespace {

// lc(v)^{deg u - deg v + 1} * u mod v, all in Z[x].
ZVec pseudo_rem(const ZVec& u, const ZVec& v) {
    const long dv = zdeg(v);
    const mpz_class& lv = v.back();
    ZVec r = u;
    long e = zdeg(u) - dv + 1;
    while (!r.empty() && zdeg(r) >= dv) {
        const mpz_class lr = r.back();
        const long k = zdeg(r) - dv;
        for (auto& c : r) c *= lv;
        for (long i = 0; i <= dv; ++i)
            mpz_submul(r[k + i].get_mpz_t(), lr.get_mpz_t(), v[i].get_mpz_t());
        znorm(r);
        --e;
    }
    if (e > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lv.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : r) c *= f;
    }
    return r;
}

ZVec divexact_scalar(ZVec a, const mpz_class& s) {
    for (auto& c : a)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    return a;
}

// Primitive gcd of two primitive inputs via the subresultant PRS.
ZVec prs_primitive_gcd(ZVec r0, ZVec r1) {
    if (zdeg(r0) < zdeg(r1)) std::swap(r0, r1);
    mpz_class g = 1, h = 1;
    while (!r1.empty()) {
        const long delta = zdeg(r0) - zdeg(r1);
        ZVec rem = pseudo_rem(r0, r1);
        r0 = std::move(r1);
        if (rem.empty()) {
            r1.clear();
            break;
        }
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        r1 = divexact_scalar(std::move(rem), g * hd);
        g = r0.back();
        if (delta > 0) {
            mpz_class gd;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            mpz_class hd1;
            mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
        }
    }
    return zprimitive(r0);
}

// Modular (Brown) gcd of primitive inputs, both of degree >= 1.
// Returns nullopt if the prime budget is exhausted (caller falls back).
std::optional<ZVec> modular_primitive_gcd(const ZVec& pa, const ZVec& pb) {
    mpz_class glc;
    mpz_gcd(glc.get_mpz_t(), pa.back().get_mpz_t(), pb.back().get_mpz_t());

    // Landau-Mignotte style budget: once dmin is known, the gcd coefficients
    // fit in roughly deg + norm-bits + lc-bits bits; beyond that many primes
    // something is wrong and we fall back to the always-correct PRS.
    auto norm_bits = [](const ZVec& v) {
        std::size_t best = 0;
        for (const auto& c : v) best = std::max(best, mpz_sizeinbase(c.get_mpz_t(), 2));
        return best;
    };
    const std::size_t base_bits = std::min(norm_bits(pa), norm_bits(pb)) + mpz_sizeinbase(glc.get_mpz_t(), 2);

    long dmin = std::numeric_limits<long>::max();
    std::size_t cap = 1u << 20;  // refined once dmin is known
    std::vector<mpz_class> lift;  // balanced CRT lift, indexed 0..dmin
    std::vector<mpz_class> prev_lift;
    mpz_class modulus = 0;
    bool have_prev = false;

    for (std::size_t pi = 0, used = 0; used <= cap; ++pi) {
        const u64 p = nth_modular_prime(pi);
        if (mpz_fdiv_ui(pa.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(pb.back().get_mpz_t(), p) == 0)
            continue;
        MVec img = gcd_mod(reduce_mod(pa, p), reduce_mod(pb, p), p);
        const long d = static_cast<long>(img.size()) - 1;
        if (d == 0) return ZVec{1};
        if (d > dmin) continue;  // unlucky prime
        if (d < dmin) {
            dmin = d;
            modulus = 0;
            have_prev = false;
            cap = (static_cast<std::size_t>(dmin) + base_bits) / 61 + 24;
            used = 0;
        }
        ++used;
        // leading-coefficient correction: scale the monic image to glc
        const u64 s = mpz_fdiv_ui(glc.get_mpz_t(), p);
        if (modulus == 0) {
            lift.assign(dmin + 1, 0);
            for (long k = 0; k <= dmin; ++k) {
                u64 c = mulmod(img[k], s, p);
                mpz_class v(static_cast<unsigned long>(c));
                if (c > p / 2) v -= mpz_class(static_cast<unsigned long>(p));
                lift[k] = v;
            }
            modulus = static_cast<unsigned long>(p);
        } else {
            const u64 minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
            const mpz_class pz(static_cast<unsigned long>(p));
            const mpz_class new_mod = modulus * pz;
            const mpz_class half = new_mod / 2;
            for (long k = 0; k <= dmin; ++k) {
                const u64 target = mulmod(img[k], s, p);
                const u64 cur = mpz_fdiv_ui(lift[k].get_mpz_t(), p);
                const u64 diff = (target >= cur) ? target - cur : target + p - cur;
                const u64 t = mulmod(diff, minv, p);
                lift[k] += modulus * mpz_class(static_cast<unsigned long>(t));
                // balance into (-new_mod/2, new_mod/2]
                mpz_fdiv_r(lift[k].get_mpz_t(), lift[k].get_mpz_t(), new_mod.get_mpz_t());
                if (lift[k] > half) lift[k] -= new_mod;
            }
            modulus = new_mod;
        }
        if (have_prev && lift == prev_lift) {
            ZVec cand(lift.begin(), lift.end());
            znorm(cand);
            if (zdeg(cand) == dmin) {
                cand = zprimitive(cand);
                if (zdivexact(pa, cand) && zdivexact(pb, cand)) return cand;
            }
        }
        prev_lift = lift;
        have_prev = true;
    }
    return std::nullopt;
}

// Common driver: content split + trivial cases, then `core` on the
// primitive parts.
template <typename Core>
ZVec gcd_driver(const ZVec& a, const ZVec& b, Core&& core) {
    if (a.empty() && b.empty()) return {};
    if (a.empty()) {
        ZVec r = b;
        if (r.back() < 0) r = zneg(std::move(r));
        return r;
    }
    if (b.empty()) {
        ZVec r = a;
        if (r.back() < 0) r = zneg(std::move(r));
        return r;
    }
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), zcontent(a).get_mpz_t(), zcontent(b).get_mpz_t());
    ZVec pa = zprimitive(a), pb = zprimitive(b);
    if (pa == pb) return zmul_scalar(std::move(pa), c);
    if (zdeg(pa) == 0 || zdeg(pb) == 0) return {c};
    return zmul_scalar(core(pa, pb), c);
}

}  // namespace

ZVec zgcd(const ZVec& a, const ZVec& b) {
    return gcd_driver(a, b, [](const ZVec& pa, const ZVec& pb) {
        if (auto r = modular_primitive_gcd(pa, pb)) return *r;
        return prs_primitive_gcd(pa, pb);
    });
}

ZVec zgcd_subresultant(const ZVec& a, const ZVec& b) {
    return gcd_driver(a, b, [](const ZVec& pa, const ZVec& pb) { return prs_primitive_gcd(pa, pb); });
}

}  // namespace zplusi::detail
