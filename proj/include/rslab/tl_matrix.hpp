#pragma once

#include <string>
#include <vector>

#include "rslab/link_pattern.hpp"

namespace rslab {

/// Dense row-major integer matrix; just enough for the operator algebra.
class IntMatrix {
public:
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

    static IntMatrix identity(int dim);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    long long& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    long long at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

private:
    int rows_, cols_;
    std::vector<long long> data_;
};

/// Matrix of e_i over the canonical link-pattern basis. Every column carries a
/// single 1 (each basis vector maps to one basis vector), so only the image
/// map column -> row is stored; entries are materialized on demand.
class TlOperatorMatrix {
public:
    int n() const { return half_; }
    int index() const { return op_; }
    int dim() const { return static_cast<int>(image_.size()); }

    /// Row index of the single 1 in column `col` (0-based).
    int image(int col) const { return image_[col]; }
    int entry(int row, int col) const { return image_[col] == row ? 1 : 0; }

    IntMatrix dense() const;

private:
    TlOperatorMatrix(int n, int i, std::vector<int> image)
        : half_(n), op_(i), image_(std::move(image)) {}

    int half_, op_;
    std::vector<int> image_;

    friend TlOperatorMatrix operator_matrix(int i, const std::vector<LinkPattern>& basis);
};

/// Builds the matrix of e_i in the given basis, which must be the canonical
/// output of enumerate_link_patterns (re-derived and compared; throws
/// std::invalid_argument otherwise).
TlOperatorMatrix operator_matrix(int i, const std::vector<LinkPattern>& basis);

struct RelationCheck {
    std::string relation;
    bool pass;
};

struct RelationReport {
    int n;
    std::vector<RelationCheck> checks;
    bool all_pass() const;
};

/// Verifies, as matrix identities over the canonical basis, the three
/// Temperley-Lieb families: e_i^2 = e_i, commutation at cyclic distance >= 2,
/// and e_i e_{i+-1} e_i = e_i (indices cyclic in [1, 2n]).
RelationReport check_tl_relations(int n);

} // namespace rslab
