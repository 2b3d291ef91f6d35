#pragma once

// The closed variable universe and polynomial rings over it.
//
// A Ring is an ordered tuple of distinct variables; the tuple order is the
// ring's canonical variable precedence (first = most significant).  All
// polynomial data is interpreted relative to one ring, and binary operations
// require operands over the same ring.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace conchoid {

enum class Var : std::uint8_t {
    x1, x2, y1, y2, w, d, a, b, z1, z2, t1, t2, omega, lambda,
};

inline constexpr int kMaxVars = 14;

const char* var_name(Var v);

// Maps "x1", "omega", ... back to the enum; throws ParseError otherwise.
Var parse_var(const std::string& name);

class Ring {
public:
    Ring() = default;
    Ring(std::initializer_list<Var> vars) : vars_(vars) { validate(); }
    explicit Ring(std::vector<Var> vars) : vars_(std::move(vars)) { validate(); }

    int size() const { return static_cast<int>(vars_.size()); }
    Var var(int i) const { return vars_[static_cast<std::size_t>(i)]; }
    const std::vector<Var>& vars() const { return vars_; }

    bool contains(Var v) const {
        return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
    }

    // Position of v in the tuple, or -1 when absent.
    int index_of(Var v) const {
        for (int i = 0; i < size(); ++i)
            if (vars_[static_cast<std::size_t>(i)] == v) return i;
        return -1;
    }

    // Tuple with the given variables removed, keeping the remaining order.
    Ring without(const std::vector<Var>& dropped) const;

    bool operator==(const Ring& o) const { return vars_ == o.vars_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void validate() const;

    std::vector<Var> vars_;
};

} // namespace conchoid
