#pragma once

#include "cmdbell/errors.hpp"
#include "cmdbell/model.hpp"
#include "cmdbell/strategy.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cmdbell {

inline constexpr int kXiDimension = 3 * kStrategyCount; // 48

enum class RowKind {
    correlation,      // matches a pair's correlation to the reference one
    normalization,    // a block must sum to zero
    alice_contrast,   // Alice marginal must not depend on Bob's setting
    bob_contrast,     // Bob marginal must not depend on Alice's setting
};

struct ConstraintRow {
    RowKind kind;
    std::string label;
    std::array<int, kXiDimension> entries{}; // each -1, 0 or +1

    std::int64_t dot(const ConstraintRow& other) const {
        std::int64_t s = 0;
        for (int i = 0; i < kXiDimension; ++i)
            s += static_cast<std::int64_t>(entries[i]) * other.entries[i];
        return s;
    }

    std::int64_t norm_squared() const { return dot(*this); }
};

/// Integer constraint matrix over the 48-dimensional xi space
/// (columns: 16*block + lambda, blocks in order A1B2, A2B1, A2B2).
struct ConstraintMatrix {
    std::string name;
    std::vector<ConstraintRow> rows;

    bool rows_pairwise_orthogonal() const {
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i + 1; j < rows.size(); ++j)
                if (rows[i].dot(rows[j]) != 0)
                    return false;
        return true;
    }
};

/// The matrix M whose kernel is exactly the xi vectors leaving every
/// correlation equal to its reference-pair value. Six rows: for each
/// non-reference pair, first a correlation row (entries a_i*b_j on that
/// pair's block), then after all three of those, one normalization row
/// per block (all ones). Rows 0..2 are the correlation rows; gamma uses
/// their dot products with xi.
ConstraintMatrix build_cmd_matrix();

/// The matrix N whose kernel is exactly the xi vectors producing
/// setting-independent marginals. Seven rows: the four marginal-contrast
/// rows (Alice A1, Alice A2, Bob B1, Bob B2) followed by the three block
/// normalization rows. An eighth candidate row would be supported only on
/// the reference pair, which the xi space excludes; being identically
/// zero it is dropped.
ConstraintMatrix build_nosignal_matrix();

/// Exact row rank (fraction-free integer elimination).
int rank(const ConstraintMatrix& m);

/// Exact integer kernel basis. Vectors are mutually orthogonal (integer
/// Gram-Schmidt, each reduced to primitive form) but not normalized.
struct KernelBasis {
    std::vector<std::array<std::int64_t, kXiDimension>> vectors;

    int dimension() const { return static_cast<int>(vectors.size()); }
};

KernelBasis kernel_basis(const ConstraintMatrix& m);

/// Per-row dot products with xi, plus the max magnitude. Zero iff xi lies
/// in the kernel.
template <typename T>
struct ResidualVector {
    std::vector<T> per_row;
    T max_abs{};
};

namespace detail {
template <typename T>
T abs_value(const T& x) {
    return x < T{} ? T(-x) : x;
}
} // namespace detail

template <typename T>
ResidualVector<T> residual(const ConstraintMatrix& m, const BasicXiVector<T>& xi) {
    ResidualVector<T> r;
    r.per_row.reserve(m.rows.size());
    for (const ConstraintRow& row : m.rows) {
        T dot{};
        for (int i = 0; i < kXiDimension; ++i) {
            if (row.entries[i] == 0)
                continue;
            if (row.entries[i] > 0)
                dot += xi.flat(i);
            else
                dot -= xi.flat(i);
        }
        const T mag = detail::abs_value(dot);
        if (mag > r.max_abs)
            r.max_abs = mag;
        r.per_row.push_back(dot);
    }
    return r;
}

template <typename T>
T residual_max(const ConstraintMatrix& m, const BasicXiVector<T>& xi) {
    return residual(m, xi).max_abs;
}

/// Splits xi into a kernel part and a row-space part, xi = par + perp with
/// M*par = 0. Requires pairwise-orthogonal rows (both built matrices
/// qualify), so perp is the sum of per-row projections row*(row.xi)/|row|^2.
template <typename T>
struct KernelSplit {
    BasicXiVector<T> parallel; // in ker(M)
    BasicXiVector<T> perp;     // in the row space
};

template <typename T>
KernelSplit<T> project_to_kernel(const ConstraintMatrix& m, const BasicXiVector<T>& xi) {
    if (!m.rows_pairwise_orthogonal())
        throw ParameterError("project_to_kernel requires pairwise orthogonal rows (matrix '" +
                             m.name + "')");
    KernelSplit<T> split;
    split.perp = BasicXiVector<T>{};
    for (const ConstraintRow& row : m.rows) {
        const std::int64_t nsq = row.norm_squared();
        if (nsq == 0)
            continue;
        T dot{};
        for (int i = 0; i < kXiDimension; ++i) {
            if (row.entries[i] > 0)
                dot += xi.flat(i);
            else if (row.entries[i] < 0)
                dot -= xi.flat(i);
        }
        const T coeff = dot / T(nsq);
        for (int i = 0; i < kXiDimension; ++i)
            if (row.entries[i] != 0)
                split.perp.set_flat(i, split.perp.flat(i) +
                                            (row.entries[i] > 0 ? coeff : T(-coeff)));
    }
    split.parallel = xi;
    for (int i = 0; i < kXiDimension; ++i)
        split.parallel.set_flat(i, xi.flat(i) - split.perp.flat(i));
    return split;
}

/// One CSV line per row, 48 comma-separated integers, no header.
void write_csv(const ConstraintMatrix& m, std::ostream& os);

} // namespace cmdbell
