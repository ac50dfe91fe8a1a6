#include "cmdbell/constraints.hpp"

#include "cmdbell/rational.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>

namespace cmdbell {

namespace {

int flat_index(PairCode pair, int lambda) { return 16 * block_index(pair) + lambda; }

} // namespace

ConstraintMatrix build_cmd_matrix() {
    ConstraintMatrix m;
    m.name = "M";
    // Correlation rows first so that rows 0..2 are exactly the dot products
    // entering gamma.
    for (const SettingPair& sp : kNonReferencePairs) {
        ConstraintRow row;
        row.kind = RowKind::correlation;
        row.label = "corr(" + to_string(sp) + ")";
        for (int l = 0; l < kStrategyCount; ++l)
            row.entries[flat_index(sp.code(), l)] =
                outcome_at(l, sp.alice) * outcome_at(l, sp.bob);
        m.rows.push_back(row);
    }
    for (const SettingPair& sp : kNonReferencePairs) {
        ConstraintRow row;
        row.kind = RowKind::normalization;
        row.label = "norm(" + to_string(sp) + ")";
        for (int l = 0; l < kStrategyCount; ++l)
            row.entries[flat_index(sp.code(), l)] = 1;
        m.rows.push_back(row);
    }
    return m;
}

ConstraintMatrix build_nosignal_matrix() {
    ConstraintMatrix m;
    m.name = "N";

    // Alice's marginal for A1 may differ only between (A1,B1) and (A1,B2);
    // the reference block carries no xi, so the contrast reduces to the
    // (A1,B2) block alone.
    {
        ConstraintRow row;
        row.kind = RowKind::alice_contrast;
        row.label = "alice(A1)";
        for (int l = 0; l < kStrategyCount; ++l)
            row.entries[flat_index(PairCode::a1b2, l)] = -outcome_at(l, kA1);
        m.rows.push_back(row);
    }
    {
        ConstraintRow row;
        row.kind = RowKind::alice_contrast;
        row.label = "alice(A2)";
        for (int l = 0; l < kStrategyCount; ++l) {
            row.entries[flat_index(PairCode::a2b1, l)] = outcome_at(l, kA2);
            row.entries[flat_index(PairCode::a2b2, l)] = -outcome_at(l, kA2);
        }
        m.rows.push_back(row);
    }
    {
        ConstraintRow row;
        row.kind = RowKind::bob_contrast;
        row.label = "bob(B1)";
        for (int l = 0; l < kStrategyCount; ++l)
            row.entries[flat_index(PairCode::a2b1, l)] = -outcome_at(l, kB1);
        m.rows.push_back(row);
    }
    {
        ConstraintRow row;
        row.kind = RowKind::bob_contrast;
        row.label = "bob(B2)";
        for (int l = 0; l < kStrategyCount; ++l) {
            row.entries[flat_index(PairCode::a1b2, l)] = outcome_at(l, kB2);
            row.entries[flat_index(PairCode::a2b2, l)] = -outcome_at(l, kB2);
        }
        m.rows.push_back(row);
    }
    // Normalization of the three stored blocks. A fourth normalization row
    // would cover the reference block, which the xi space does not store;
    // it would be identically zero and is omitted, leaving 7 rows.
    for (const SettingPair& sp : kNonReferencePairs) {
        ConstraintRow row;
        row.kind = RowKind::normalization;
        row.label = "norm(" + to_string(sp) + ")";
        for (int l = 0; l < kStrategyCount; ++l)
            row.entries[flat_index(sp.code(), l)] = 1;
        m.rows.push_back(row);
    }
    return m;
}

namespace {

using Matrix64 = std::vector<std::array<std::int64_t, kXiDimension>>;

struct FractionFreeRref {
    Matrix64 mat;                 // reduced matrix; pivot entries all equal `denom`
    std::vector<int> pivot_cols;  // one per pivot row, ascending
    std::int64_t denom = 1;       // common pivot value after reduction
};

// Montante/Bareiss fraction-free Gauss-Jordan. Entries stay integral; every
// division is exact. Input entries are small (+-1), so 64-bit is ample.
FractionFreeRref fraction_free_rref(const ConstraintMatrix& m) {
    FractionFreeRref r;
    r.mat.reserve(m.rows.size());
    for (const ConstraintRow& row : m.rows) {
        std::array<std::int64_t, kXiDimension> v{};
        for (int i = 0; i < kXiDimension; ++i)
            v[i] = row.entries[i];
        r.mat.push_back(v);
    }

    const int nrows = static_cast<int>(r.mat.size());
    std::int64_t prev = 1;
    int pivot_row = 0;
    for (int col = 0; col < kXiDimension && pivot_row < nrows; ++col) {
        int sel = -1;
        for (int i = pivot_row; i < nrows; ++i) {
            if (r.mat[i][col] != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0)
            continue;
        std::swap(r.mat[pivot_row], r.mat[sel]);
        const std::int64_t pivot = r.mat[pivot_row][col];
        for (int i = 0; i < nrows; ++i) {
            if (i == pivot_row)
                continue;
            const std::int64_t factor = r.mat[i][col];
            for (int j = 0; j < kXiDimension; ++j)
                r.mat[i][j] = (pivot * r.mat[i][j] - factor * r.mat[pivot_row][j]) / prev;
        }
        prev = pivot;
        r.pivot_cols.push_back(col);
        ++pivot_row;
    }
    r.denom = prev;

    // Gauss-Jordan variant invariant: every pivot entry equals the last pivot.
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
        if (r.mat[k][r.pivot_cols[k]] != r.denom)
            throw std::logic_error("fraction-free elimination invariant broken");
    return r;
}

std::int64_t vec_gcd(const std::array<std::int64_t, kXiDimension>& v) {
    std::int64_t g = 0;
    for (std::int64_t x : v)
        g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

} // namespace

int rank(const ConstraintMatrix& m) {
    return static_cast<int>(fraction_free_rref(m).pivot_cols.size());
}

KernelBasis kernel_basis(const ConstraintMatrix& m) {
    const FractionFreeRref rref = fraction_free_rref(m);

    std::array<bool, kXiDimension> is_pivot{};
    for (int c : rref.pivot_cols)
        is_pivot[c] = true;

    // Raw kernel vectors: one per free column. x[free] = denom,
    // x[pivot_col(k)] = -mat[k][free].
    std::vector<std::array<std::int64_t, kXiDimension>> raw;
    for (int f = 0; f < kXiDimension; ++f) {
        if (is_pivot[f])
            continue;
        std::array<std::int64_t, kXiDimension> v{};
        v[f] = rref.denom;
        for (std::size_t k = 0; k < rref.pivot_cols.size(); ++k)
            v[rref.pivot_cols[k]] = -rref.mat[k][f];
        if (const std::int64_t g = vec_gcd(v); g > 1)
            for (auto& x : v)
                x /= g;
        raw.push_back(v);
    }

    // Exact Gram-Schmidt, then reduce each vector to a primitive integer one.
    KernelBasis basis;
    std::vector<std::array<Rational, kXiDimension>> ortho;
    ortho.reserve(raw.size());
    for (const auto& v : raw) {
        std::array<Rational, kXiDimension> u;
        for (int i = 0; i < kXiDimension; ++i)
            u[i] = Rational(v[i]);
        for (const auto& prev : ortho) {
            Rational num(0), den(0);
            for (int i = 0; i < kXiDimension; ++i) {
                num += Rational(v[i]) * prev[i];
                den += prev[i] * prev[i];
            }
            if (num == 0)
                continue;
            const Rational c = num / den;
            for (int i = 0; i < kXiDimension; ++i)
                u[i] -= c * prev[i];
        }
        ortho.push_back(u);

        BigInt lcm_den = 1;
        for (const Rational& x : u)
            lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
        BigInt gcd_num = 0;
        std::array<BigInt, kXiDimension> scaled;
        for (int i = 0; i < kXiDimension; ++i) {
            scaled[i] = boost::multiprecision::numerator(u[i]) *
                        (lcm_den / boost::multiprecision::denominator(u[i]));
            gcd_num = boost::multiprecision::gcd(gcd_num, scaled[i]);
        }
        std::array<std::int64_t, kXiDimension> out{};
        for (int i = 0; i < kXiDimension; ++i) {
            BigInt e = gcd_num == 0 ? BigInt(0) : BigInt(scaled[i] / gcd_num);
            if (e > std::numeric_limits<std::int64_t>::max() ||
                e < std::numeric_limits<std::int64_t>::min())
                throw std::overflow_error("kernel basis entry exceeds 64-bit range");
            out[i] = static_cast<std::int64_t>(e);
        }
        basis.vectors.push_back(out);
    }
    return basis;
}

void write_csv(const ConstraintMatrix& m, std::ostream& os) {
    for (const ConstraintRow& row : m.rows) {
        for (int i = 0; i < kXiDimension; ++i) {
            if (i)
                os << ',';
            os << row.entries[i];
        }
        os << '\n';
    }
}

} // namespace cmdbell
