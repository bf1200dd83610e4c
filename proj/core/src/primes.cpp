#include "tracemin/primes.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "tracemin/intx.hpp"

namespace tracemin {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return std::uint64_t(uint128(a) * b % n);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    std::uint64_t result = 1;
    base %= n;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, n);
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    return result;
}

bool miller_rabin(std::uint64_t n) {
    // exact for all n < 2^64 with the first twelve primes as witnesses
    static constexpr std::uint64_t witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : witnesses) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool trial_division(std::uint64_t x) {
    if (x % 2 == 0) return x == 2;
    if (x % 3 == 0) return x == 3;
    for (std::uint64_t d = 5; d * d <= x; d += 6) {
        if (x % d == 0 || x % (d + 2) == 0) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    if (x < 1'000'000) return trial_division(x);
    return miller_rabin(x);
}

std::optional<std::pair<std::int64_t, std::int64_t>> factor_fit(std::int64_t n, std::int64_t m) {
    if (n < 2) throw std::invalid_argument("factor_fit needs n >= 2");
    if (m < 1 || uint128(m) > uint128(n) * uint128(n)) throw std::invalid_argument("factor_fit needs 1 <= m <= n^2");
    for (std::int64_t a = 2; a * a <= m; ++a) {
        if (m % a != 0) continue;
        const std::int64_t b = m / a;
        if (b <= n) return std::make_pair(a, b);  // a <= sqrt(m) <= b <= n
    }
    return std::nullopt;
}

namespace {

constexpr std::int64_t kKMaxLimit = (std::int64_t(1) << 59) / 12;

std::vector<std::int64_t> wheel_primes() {
    // odd primes up to 199; 2 never divides 4k+-1
    std::vector<std::int64_t> out;
    for (std::int64_t p = 3; p < 200; p += 2) {
        bool prime = true;
        for (std::int64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(p);
    }
    return out;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    // p prime, gcd(a, p) = 1
    std::int64_t result = 1, base = a % p, exp = p - 2;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

void search_chunk(std::int64_t lo, std::int64_t hi, int sign, const std::vector<std::int64_t>& wheel,
                  std::vector<TripleWitness>* out) {
    const std::int64_t len = hi - lo + 1;
    std::vector<std::uint8_t> alive(std::size_t(len), 1);
    static constexpr std::int64_t coeffs[] = {4, 6, 12};
    for (std::int64_t p : wheel) {
        for (std::int64_t c : coeffs) {
            if (c % p == 0) continue;  // c*k + sign is never 0 mod p
            // solve c*k + sign == 0 (mod p)
            const std::int64_t target = (p - sign % p + p) % p * inverse_mod(c % p, p) % p;
            std::int64_t k = lo + (target - lo % p + p) % p;
            for (; k <= hi; k += p) {
                if (c * k + sign != p) alive[std::size_t(k - lo)] = 0;
            }
        }
    }
    for (std::int64_t k = lo; k <= hi; ++k) {
        if (!alive[std::size_t(k - lo)]) continue;
        const std::int64_t a = 4 * k + sign, b = 6 * k + sign, c = 12 * k + sign;
        if (is_prime(std::uint64_t(a)) && is_prime(std::uint64_t(b)) && is_prime(std::uint64_t(c)))
            out->push_back({k, sign, {a, b, c}, 12 * k + 2 * sign});
    }
}

}  // namespace

std::vector<TripleWitness> search_triples(std::int64_t k_min, std::int64_t k_max, int sign, int threads) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (k_min < 1 || k_max < k_min) throw std::invalid_argument("need 1 <= k_min <= k_max");
    if (k_max > kKMaxLimit) throw std::invalid_argument("k_max too large for 64-bit members");

    const auto wheel = wheel_primes();
    const std::int64_t total = k_max - k_min + 1;
    const int t = int(std::max<std::int64_t>(1, std::min<std::int64_t>(threads, total)));
    std::vector<std::vector<TripleWitness>> partial(static_cast<std::size_t>(t));

    auto run = [&](int w) {
        const std::int64_t chunk = (total + t - 1) / t;
        const std::int64_t lo = k_min + w * chunk;
        const std::int64_t hi = std::min(k_max, lo + chunk - 1);
        if (lo <= hi) search_chunk(lo, hi, sign, wheel, &partial[std::size_t(w)]);
    };
    if (t == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(std::size_t(t));
        for (int w = 0; w < t; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    std::vector<TripleWitness> out;  // chunks are contiguous, so order stays ascending
    for (auto& part : partial) out.insert(out.end(), part.begin(), part.end());
    return out;
}

std::optional<ClaimASolution> claim_a_solver(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("claim_a_solver needs m >= 1");
    for (std::int64_t b = 5; b * b <= m + 1; ++b) {
        for (std::int64_t c : {std::int64_t(-1), std::int64_t(0), std::int64_t(1)}) {
            if ((m - c) % b != 0) continue;
            const std::int64_t a = (m - c) / b;
            if (a >= b) return ClaimASolution{a, b, c};
        }
    }
    return std::nullopt;
}

}  // namespace tracemin
