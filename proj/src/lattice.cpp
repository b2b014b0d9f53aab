#include "hypertile/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "hypertile/errors.hpp"
#include "hypertile/tiler.hpp"

namespace hypertile {

IndexVector index_vector(const VertexPartition& p, std::span<const int> s) {
    IndexVector v(p.r(), 0);
    for (int x : s) {
        if (x < 0 || x >= p.n()) throw std::invalid_argument("index_vector: vertex out of range");
        int part = p.part_of(x);
        if (part > 0) ++v[part - 1];
    }
    return v;
}

namespace {

std::vector<VectorCount> to_sorted_counts(std::map<IndexVector, long long>& m) {
    std::vector<VectorCount> out;
    out.reserve(m.size());
    for (auto& [vec, count] : m) out.push_back({vec, count});
    return out;
}

// threshold = ceil(mu * n^power), exact
long long robust_threshold(const Rational& mu, int n, int power) {
    __int128 npow = 1;
    for (int i = 0; i < power; ++i) {
        npow *= n;
        if (npow > INT64_MAX) throw OverflowError("robust threshold: n^k overflow");
    }
    __int128 prod = (__int128)mu.num() * npow;
    __int128 den = mu.den();
    __int128 q = prod / den;
    if (prod % den != 0 && prod > 0) ++q;
    if (q > INT64_MAX) throw OverflowError("robust threshold overflow");
    return static_cast<long long>(q);
}

std::vector<VectorCount> filter_threshold(std::vector<VectorCount> counts, long long threshold) {
    counts.erase(std::remove_if(counts.begin(), counts.end(),
                                [&](const VectorCount& vc) { return vc.count < threshold; }),
                 counts.end());
    return counts;
}

}  // namespace

std::vector<VectorCount> edge_vector_counts(const Hypergraph3& h, const VertexPartition& p) {
    if (p.n() != h.n()) throw std::invalid_argument("partition does not match host");
    std::map<IndexVector, long long> census;
    for (const auto& e : h.edges()) {
        if (p.part_of(e[0]) == 0 || p.part_of(e[1]) == 0 || p.part_of(e[2]) == 0) continue;
        IndexVector v(p.r(), 0);
        for (int x : e) ++v[p.part_of(x) - 1];
        ++census[v];
    }
    return to_sorted_counts(census);
}

std::vector<VectorCount> robust_edge_vectors(const Hypergraph3& h, const VertexPartition& p,
                                             const Rational& mu) {
    if (mu < Rational(0)) throw std::invalid_argument("mu must be >= 0");
    return filter_threshold(edge_vector_counts(h, p), robust_threshold(mu, h.n(), 3));
}

std::vector<VectorCount> k_vector_counts(const Hypergraph3& h, const VertexPartition& p,
                                         const KSpec& spec) {
    if (p.n() != h.n()) throw std::invalid_argument("partition does not match host");
    std::map<IndexVector, long long> census;
    for_each_copy(h, spec, [&](const KCopy& copy) {
        IndexVector v(p.r(), 0);
        bool meets_v0 = false;
        for (const auto& cls : copy.parts)
            for (int x : cls) {
                int part = p.part_of(x);
                if (part == 0) {
                    meets_v0 = true;
                    break;
                }
                ++v[part - 1];
            }
        if (!meets_v0) ++census[v];
        return true;
    });
    return to_sorted_counts(census);
}

std::vector<VectorCount> robust_k_vectors(const Hypergraph3& h, const VertexPartition& p,
                                          const KSpec& spec, const Rational& mu_prime) {
    if (mu_prime < Rational(0)) throw std::invalid_argument("mu' must be >= 0");
    return filter_threshold(k_vector_counts(h, p, spec), robust_threshold(mu_prime, h.n(), spec.k));
}

namespace {

using Row = std::vector<long long>;

long long checked_mul(long long a, long long b) {
    __int128 p = (__int128)a * b;
    if (p > INT64_MAX || p < INT64_MIN) throw OverflowError("lattice arithmetic overflow");
    return static_cast<long long>(p);
}

long long checked_sub(long long a, long long b) {
    __int128 p = (__int128)a - b;
    if (p > INT64_MAX || p < INT64_MIN) throw OverflowError("lattice arithmetic overflow");
    return static_cast<long long>(p);
}

long long checked_add(long long a, long long b) {
    __int128 p = (__int128)a + b;
    if (p > INT64_MAX || p < INT64_MIN) throw OverflowError("lattice arithmetic overflow");
    return static_cast<long long>(p);
}

void row_axpy(Row& target, const Row& src, long long q) {
    // target -= q * src
    for (std::size_t i = 0; i < target.size(); ++i)
        target[i] = checked_sub(target[i], checked_mul(q, src[i]));
}

}  // namespace

MembershipResult lattice_contains(const LatticeBasis& basis, const IndexVector& target) {
    const int g = static_cast<int>(basis.generators.size());
    const int r = static_cast<int>(target.size());
    for (const auto& gen : basis.generators)
        if (static_cast<int>(gen.size()) != r)
            throw std::invalid_argument("lattice_contains: dimension mismatch");

    MembershipResult res;
    if (g == 0) {
        res.member = std::all_of(target.begin(), target.end(), [](long long x) { return x == 0; });
        return res;
    }

    // Row echelon over Z: H = U * A with U unimodular.
    std::vector<Row> H = basis.generators;
    std::vector<Row> U(g, Row(g, 0));
    for (int i = 0; i < g; ++i) U[i][i] = 1;

    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < r && rank < g; ++col) {
        // gcd-reduce entries of this column below the current rank
        for (;;) {
            int best = -1;
            for (int row = rank; row < g; ++row)
                if (H[row][col] != 0 &&
                    (best == -1 || std::abs(H[row][col]) < std::abs(H[best][col])))
                    best = row;
            if (best == -1) break;
            std::swap(H[best], H[rank]);
            std::swap(U[best], U[rank]);
            bool reduced_all = true;
            for (int row = rank + 1; row < g; ++row) {
                if (H[row][col] == 0) continue;
                long long q = H[row][col] / H[rank][col];
                row_axpy(H[row], H[rank], q);
                row_axpy(U[row], U[rank], q);
                if (H[row][col] != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (H[rank][col] != 0) {
            pivot_col.push_back(col);
            ++rank;
        }
    }

    // forward-substitute y * H = target over the echelon rows
    Row y(g, 0);
    Row rem = target;
    for (int i = 0; i < rank; ++i) {
        int col = pivot_col[i];
        if (rem[col] % H[i][col] != 0) return res;  // non-member
        long long q = rem[col] / H[i][col];
        y[i] = q;
        row_axpy(rem, H[i], q);
    }
    if (!std::all_of(rem.begin(), rem.end(), [](long long x) { return x == 0; })) return res;

    // x = y * U
    Row x(g, 0);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) x[j] = checked_add(x[j], checked_mul(y[i], U[i][j]));

    // exact back-verification
    Row check(r, 0);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < r; ++j)
            check[j] = checked_add(check[j], checked_mul(x[i], basis.generators[i][j]));
    for (int j = 0; j < r; ++j)
        if (check[j] != target[j]) throw std::logic_error("lattice witness verification failed");

    res.member = true;
    res.coeffs = std::move(x);
    return res;
}

TransferralResult transferral_check(const Hypergraph3& h, const VertexPartition& p,
                                    const KSpec& spec, const Rational& mu_prime,
                                    std::optional<long long> min_count) {
    TransferralResult out;
    auto counts = k_vector_counts(h, p, spec);
    const long long threshold =
        min_count ? *min_count : robust_threshold(mu_prime, h.n(), spec.k);
    counts = filter_threshold(std::move(counts), threshold);
    out.k_vectors = counts;

    LatticeBasis basis;
    for (const auto& vc : counts) basis.generators.push_back(vc.vec);

    const int r = p.r();
    out.pass = true;
    for (int j = 1; j <= r; ++j)
        for (int l = j + 1; l <= r; ++l) {
            IndexVector diff(r, 0);
            diff[j - 1] = 1;
            diff[l - 1] = -1;
            if (!lattice_contains(basis, diff).member) {
                out.pass = false;
                out.missing.emplace_back(j, l);
            }
        }
    return out;
}

}  // namespace hypertile
