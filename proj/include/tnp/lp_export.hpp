#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tnp/graph.hpp"

namespace tnp {

/// Exact fraction over int64, always reduced with a positive denominator.
class Rational {
public:
    Rational(std::int64_t num = 0, std::int64_t den = 1);
    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    bool operator==(const Rational& o) const = default;
    auto operator<=>(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ <=> static_cast<__int128>(o.num_) * den_;
    }
    bool is_integer() const { return den_ == 1; }
    std::string str() const;

private:
    std::int64_t num_, den_;
};

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, GreaterEqual, Equal };

struct LpVariable {
    std::string name;
    std::int64_t lower = 0;
    std::int64_t upper = 1;
    bool integer = false;
};

struct LpTerm {
    std::size_t var;
    std::int64_t coef;
};

struct LpConstraint {
    std::string name;
    std::vector<LpTerm> terms;
    Relation relation = Relation::GreaterEqual;
    std::int64_t rhs = 0;
};

struct LpModel {
    Sense sense = Sense::Minimize;
    std::vector<LpVariable> variables;
    std::vector<LpTerm> objective;
    std::vector<LpConstraint> constraints;

    /// Throws InputError on an unknown name.
    std::size_t index_of(const std::string& name) const;
    /// Dangling variable references or duplicate names.
    bool valid() const;
};

/// min sum x_v + 2 sum y_v  s.t.  x_v + sum_{u in N[v]} y_u >= 1.
LpModel build_rdp_ilp(const Graph& g, bool relax);

/// max sum a_v  s.t.  sum_{u in N[v]} a_u <= 2,  0 <= a_v <= 1.
LpModel build_tnp_dual(const Graph& g, bool integer);

/// CPLEX LP text.
std::string write_lp(const LpModel& model);

struct Evaluation {
    Rational objective;
    bool feasible = false;
};

/// One value per variable, in declaration order.
Evaluation evaluate(const LpModel& model, const std::vector<Rational>& assignment);
/// By name; every variable must be present (InputError otherwise).
Evaluation evaluate(const LpModel& model, const std::map<std::string, Rational>& assignment);

/// Optimum over all 0/1 points of an integer model by enumeration.
/// Primal: y is enumerated, x is set to the least feasible completion.
/// Dual: all a in {0,1}^n. Refuses n > 22.
Rational integer_optimum_primal(const Graph& g);
Rational integer_optimum_dual(const Graph& g);

}  // namespace tnp
