#include "rslab/tl_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace rslab {

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
    IntMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const long long v = at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < o.cols_; ++c) out.at(r, c) += v * o.at(k, c);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("IntMatrix: shape mismatch in sum");
    IntMatrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c) + o.at(r, c);
    return out;
}

IntMatrix TlOperatorMatrix::dense() const {
    IntMatrix m(dim(), dim());
    for (int col = 0; col < dim(); ++col) m.at(image_[col], col) = 1;
    return m;
}

TlOperatorMatrix operator_matrix(int i, const std::vector<LinkPattern>& basis) {
    if (basis.empty()) throw std::invalid_argument("operator_matrix: empty basis");
    const int n = basis.front().n();
    if (basis != enumerate_link_patterns(n))
        throw std::invalid_argument("operator_matrix: basis is not the canonical one");
    if (i < 1 || i > 2 * n) throw std::out_of_range("operator_matrix: operator index out of range");

    std::vector<int> image(basis.size());
    for (size_t col = 0; col < basis.size(); ++col) {
        const int row = pattern_index(basis, apply_e(i, basis[col]));
        if (row < 0) throw std::logic_error("operator_matrix: image escaped the basis");
        image[col] = row;
    }
    return TlOperatorMatrix(n, i, std::move(image));
}

bool RelationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

RelationReport check_tl_relations(int n) {
    if (n < 1) throw std::invalid_argument("check_tl_relations: n must be positive");
    const auto basis = enumerate_link_patterns(n);
    const int m = 2 * n;

    std::vector<IntMatrix> e;
    e.reserve(m);
    for (int i = 1; i <= m; ++i) e.push_back(operator_matrix(i, basis).dense());

    RelationReport report{n, {}};
    const auto name = [](int i) { return "e" + std::to_string(i); };

    for (int i = 1; i <= m; ++i) {
        const auto& M = e[i - 1];
        report.checks.push_back({name(i) + "^2 = " + name(i), M * M == M});
    }
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            const int dist = std::min(j - i, m - (j - i));
            if (dist < 2) continue;
            report.checks.push_back({name(i) + " " + name(j) + " = " + name(j) + " " + name(i),
                                     e[i - 1] * e[j - 1] == e[j - 1] * e[i - 1]});
        }
    for (int i = 1; i <= m; ++i)
        for (int delta : {+1, -1}) {
            const int j = ((i - 1 + delta) % m + m) % m + 1;
            report.checks.push_back(
                {name(i) + " " + name(j) + " " + name(i) + " = " + name(i),
                 e[i - 1] * e[j - 1] * e[i - 1] == e[i - 1]});
        }
    return report;
}

} // namespace rslab
