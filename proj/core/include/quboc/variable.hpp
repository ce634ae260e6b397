#pragma once

#include <compare>
#include <string>

namespace quboc {

/// Kind of a decision variable. Binary and auxiliary variables take values
/// in {0,1}; continuous variables take real values until they are encoded.
enum class VarKind { Continuous, Binary, Auxiliary };

constexpr bool is_binary_valued(VarKind k) {
    return k == VarKind::Binary || k == VarKind::Auxiliary;
}

const char* var_kind_name(VarKind k);

/// Named decision variable. Names must be unique within one polynomial's
/// variable universe; the kind is fixed at construction.
class Var {
  public:
    Var() : kind_(VarKind::Continuous) {}
    Var(std::string name, VarKind kind) : name_(std::move(name)), kind_(kind) {}

    const std::string& name() const { return name_; }
    VarKind kind() const { return kind_; }

    friend bool operator==(const Var& a, const Var& b) {
        return a.name_ == b.name_ && a.kind_ == b.kind_;
    }
    friend std::strong_ordering operator<=>(const Var& a, const Var& b) {
        if (auto c = a.name_ <=> b.name_; c != 0) return c;
        return a.kind_ <=> b.kind_;
    }

  private:
    std::string name_;
    VarKind kind_;
};

inline Var continuous_var(std::string name) { return Var(std::move(name), VarKind::Continuous); }
inline Var binary_var(std::string name) { return Var(std::move(name), VarKind::Binary); }
inline Var aux_var(std::string name) { return Var(std::move(name), VarKind::Auxiliary); }

}  // namespace quboc
