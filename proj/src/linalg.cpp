#include "chowlab/linalg.hpp"

#include "chowlab/errors.hpp"

#include <utility>

namespace chowlab {

namespace {

// Denominator-cleared copy: every row is scaled by the lcm of its
// denominators (positive, so rank and pivot structure are unchanged).
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<mpz_class> a;
    std::vector<mpz_class> row_scale;

    mpz_class& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const mpz_class& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

IntMatrix clear_denominators(const MatrixQ& m) {
    IntMatrix out;
    out.rows = m.rows();
    out.cols = m.cols();
    out.a.resize(static_cast<std::size_t>(out.rows) * out.cols);
    out.row_scale.resize(static_cast<std::size_t>(out.rows), 1);
    for (int i = 0; i < out.rows; ++i) {
        mpz_class lcm = 1;
        for (int j = 0; j < out.cols; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        out.row_scale[static_cast<std::size_t>(i)] = lcm;
        for (int j = 0; j < out.cols; ++j) {
            Rational scaled = m.at(i, j) * Rational(lcm);
            out.at(i, j) = scaled.get_num(); // denominator is 1 by construction
        }
    }
    return out;
}

struct Elimination {
    int rank = 0;
    int sign = 1;               // parity of row swaps
    mpz_class last_pivot = 1;   // final Bareiss pivot (det of the cleared matrix when full rank)
    std::vector<int> pivot_cols;
};

// One-step fraction-free (Bareiss) forward elimination, in place. The hook
// mirrors every row operation onto caller-owned satellite data (the
// polynomial right-hand sides in solve_exact).
template <typename SwapFn, typename CombineFn>
Elimination bareiss(IntMatrix& M, SwapFn&& on_swap, CombineFn&& on_combine) {
    Elimination e;
    mpz_class prev = 1;
    for (int col = 0; col < M.cols && e.rank < M.rows; ++col) {
        int pivot = -1;
        for (int i = e.rank; i < M.rows; ++i)
            if (M.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != e.rank) {
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(pivot, j), M.at(e.rank, j));
            on_swap(pivot, e.rank);
            e.sign = -e.sign;
        }
        const int r = e.rank;
        for (int i = r + 1; i < M.rows; ++i) {
            mpz_class head = M.at(i, col);
            for (int j = col + 1; j < M.cols; ++j) {
                mpz_class num = M.at(r, col) * M.at(i, j) - head * M.at(r, j);
                mpz_divexact(M.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            M.at(i, col) = 0;
            on_combine(i, r, M.at(r, col), head, prev);
        }
        prev = M.at(r, col);
        e.pivot_cols.push_back(col);
        ++e.rank;
    }
    e.last_pivot = prev;
    return e;
}

void noop_swap(int, int) {}
void noop_combine(int, int, const mpz_class&, const mpz_class&, const mpz_class&) {}

} // namespace

int rank_exact(const MatrixQ& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    IntMatrix M = clear_denominators(m);
    return bareiss(M, noop_swap, noop_combine).rank;
}

Rational determinant_exact(const MatrixQ& m) {
    if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
    if (m.rows() == 0) return Rational(1);
    IntMatrix M = clear_denominators(m);
    Elimination e = bareiss(M, noop_swap, noop_combine);
    if (e.rank < m.rows()) return Rational(0);
    Rational det(e.last_pivot);
    for (const auto& s : M.row_scale) det /= Rational(s);
    return e.sign > 0 ? det : -det;
}

std::vector<GradedPoly> solve_exact(const MatrixQ& A, std::vector<GradedPoly> b) {
    const int n = A.rows();
    if (A.cols() != n) throw StructuralError("solve_exact: square system expected");
    if (static_cast<int>(b.size()) != n) throw StructuralError("solve_exact: rhs size mismatch");
    if (n == 0) return {};
    const Alphabet& alphabet = b[0].alphabet();
    const int T = b[0].truncation();
    for (const auto& p : b)
        if (p.alphabet() != alphabet || p.truncation() != T)
            throw StructuralError("solve_exact: mixed rhs contexts");

    IntMatrix M = clear_denominators(A);
    for (int i = 0; i < n; ++i)
        b[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] * Rational(M.row_scale[static_cast<std::size_t>(i)]);

    Elimination e = bareiss(
        M,
        [&](int i, int j) { std::swap(b[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)]); },
        [&](int i, int r, const mpz_class& pivot, const mpz_class& head, const mpz_class& prev) {
            // same combination as the matrix row, over rationals
            GradedPoly num = b[static_cast<std::size_t>(i)] * Rational(pivot) -
                             b[static_cast<std::size_t>(r)] * Rational(head);
            Rational inv_prev(1, prev);
            inv_prev.canonicalize();
            b[static_cast<std::size_t>(i)] = num * inv_prev;
        });
    if (e.rank < n) throw DegeneracyError("solve_exact: singular system");

    std::vector<GradedPoly> x(static_cast<std::size_t>(n), GradedPoly::zero(alphabet, T));
    for (int i = n - 1; i >= 0; --i) {
        GradedPoly acc = b[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            acc = acc - x[static_cast<std::size_t>(j)] * Rational(M.at(i, j));
        Rational inv(1, M.at(i, i));
        inv.canonicalize();
        x[static_cast<std::size_t>(i)] = acc * inv;
    }
    return x;
}

MatrixQ kronecker(const MatrixQ& a, const MatrixQ& b) {
    MatrixQ out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    out.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    return out;
}

std::vector<int> greedy_row_basis(const MatrixQ& candidates, int target) {
    if (target > candidates.cols())
        throw StructuralError("greedy_row_basis: target rank exceeds column count");
    // Reduced rows kept so far, each with its leading column.
    std::vector<std::vector<Rational>> reduced;
    std::vector<int> lead;
    std::vector<int> picked;
    for (int i = 0; i < candidates.rows() && static_cast<int>(picked.size()) < target; ++i) {
        std::vector<Rational> row(static_cast<std::size_t>(candidates.cols()));
        for (int j = 0; j < candidates.cols(); ++j) row[static_cast<std::size_t>(j)] = candidates.at(i, j);
        for (std::size_t r = 0; r < reduced.size(); ++r) {
            const Rational& head = row[static_cast<std::size_t>(lead[r])];
            if (head == 0) continue;
            Rational factor = head / reduced[r][static_cast<std::size_t>(lead[r])];
            for (int j = 0; j < candidates.cols(); ++j)
                row[static_cast<std::size_t>(j)] -= factor * reduced[r][static_cast<std::size_t>(j)];
        }
        int l = -1;
        for (int j = 0; j < candidates.cols(); ++j)
            if (row[static_cast<std::size_t>(j)] != 0) { l = j; break; }
        if (l < 0) continue;
        reduced.push_back(std::move(row));
        lead.push_back(l);
        picked.push_back(i);
    }
    if (static_cast<int>(picked.size()) < target)
        throw DegeneracyError("greedy_row_basis: candidates do not span the target rank");
    return picked;
}

} // namespace chowlab
