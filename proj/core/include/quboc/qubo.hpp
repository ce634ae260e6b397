#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "quboc/compile.hpp"
#include "quboc/polynomial.hpp"

namespace quboc {

/// Upper-triangular QUBO coefficient matrix with a constant offset:
///   energy(z) = offset + sum_{i<=j} c_ij z_i z_j,  z in {0,1}^n.
/// The symmetric convention Q_ij = c_ij / 2 (i < j), Q_ii = c_ii recovers
/// the quadratic-form view.
class QuboMatrix {
  public:
    using Entries = std::map<std::pair<int, int>, double>;

    QuboMatrix() = default;
    QuboMatrix(int n, Entries entries, double offset, std::vector<Var> labels);

    int size() const { return n_; }
    double offset() const { return offset_; }
    const Entries& entries() const { return entries_; }
    const std::vector<Var>& labels() const { return labels_; }
    double entry(int i, int j) const;

    double energy(const std::vector<std::uint8_t>& bits) const;

    /// Text serialization:
    ///   QUBO 1
    ///   VARS <n>
    ///   OFFSET <decimal>
    ///   <i> <j> <decimal>   (0 <= i <= j < n, ascending, nonzero entries)
    /// with '#' comment lines and shortest round-trip decimals. A write/read
    /// round trip reproduces the matrix bit-exactly.
    void write(std::ostream& os) const;
    static QuboMatrix read(std::istream& is);

  private:
    int n_ = 0;
    Entries entries_;
    double offset_ = 0.0;
    std::vector<Var> labels_;
};

/// Collects a quadratic binary polynomial into matrix form with the given
/// bit order. Throws std::invalid_argument when the polynomial has arity
/// above 2, a non-binary variable, or a variable missing from the order.
QuboMatrix assemble(const Polynomial& quadratic_form, const std::vector<Var>& label_order);

/// Matrix form of compiled artifacts, ordered by the registry labels.
QuboMatrix assemble(const CompileArtifacts& artifacts);

}  // namespace quboc
