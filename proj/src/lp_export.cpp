#include "tnp/lp_export.hpp"

#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tnp/errors.hpp"

namespace tnp {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InputError("Rational: zero denominator");
    if (den < 0) num = -num, den = -den;
    const std::int64_t g = std::gcd(num, den);
    num_ = num / (g ? g : 1);
    den_ = den / (g ? g : 1);
}

Rational Rational::operator+(const Rational& o) const {
    const std::int64_t g = std::gcd(den_, o.den_);
    return Rational(num_ * (o.den_ / g) + o.num_ * (den_ / g), den_ / g * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    const std::int64_t g1 = std::gcd(num_, o.den_), g2 = std::gcd(o.num_, den_);
    return Rational((num_ / (g1 ? g1 : 1)) * (o.num_ / (g2 ? g2 : 1)),
                    (den_ / (g2 ? g2 : 1)) * (o.den_ / (g1 ? g1 : 1)));
}

std::string Rational::str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t LpModel::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i].name == name) return i;
    throw InputError("unknown LP variable: " + name);
}

bool LpModel::valid() const {
    std::set<std::string> names;
    for (const auto& v : variables)
        if (!names.insert(v.name).second) return false;
    std::set<std::string> cnames;
    for (const auto& c : constraints) {
        if (!cnames.insert(c.name).second) return false;
        for (const auto& t : c.terms)
            if (t.var >= variables.size()) return false;
    }
    for (const auto& t : objective)
        if (t.var >= variables.size()) return false;
    return true;
}

LpModel build_rdp_ilp(const Graph& g, bool relax) {
    const std::size_t n = g.n();
    LpModel m;
    m.sense = Sense::Minimize;
    for (std::size_t v = 0; v < n; ++v) m.variables.push_back({"x" + std::to_string(v), 0, 1, !relax});
    for (std::size_t v = 0; v < n; ++v) m.variables.push_back({"y" + std::to_string(v), 0, 1, !relax});
    for (std::size_t v = 0; v < n; ++v) m.objective.push_back({v, 1});
    for (std::size_t v = 0; v < n; ++v) m.objective.push_back({n + v, 2});
    for (std::size_t v = 0; v < n; ++v) {
        LpConstraint c{"c" + std::to_string(v), {{v, 1}}, Relation::GreaterEqual, 1};
        for (Vertex u : closed_neighbourhood(g, static_cast<Vertex>(v)).members())
            c.terms.push_back({n + static_cast<std::size_t>(u), 1});
        m.constraints.push_back(std::move(c));
    }
    return m;
}

LpModel build_tnp_dual(const Graph& g, bool integer) {
    const std::size_t n = g.n();
    LpModel m;
    m.sense = Sense::Maximize;
    for (std::size_t v = 0; v < n; ++v) m.variables.push_back({"a" + std::to_string(v), 0, 1, integer});
    for (std::size_t v = 0; v < n; ++v) m.objective.push_back({v, 1});
    for (std::size_t v = 0; v < n; ++v) {
        LpConstraint c{"p" + std::to_string(v), {}, Relation::LessEqual, 2};
        for (Vertex u : closed_neighbourhood(g, static_cast<Vertex>(v)).members())
            c.terms.push_back({static_cast<std::size_t>(u), 1});
        m.constraints.push_back(std::move(c));
    }
    return m;
}

namespace {

void write_terms(std::ostream& os, const LpModel& m, const std::vector<LpTerm>& terms) {
    bool first = true;
    for (const auto& t : terms) {
        if (t.coef == 0) continue;
        std::int64_t c = t.coef;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "- ";
            c = -c;
        }
        if (c != 1) os << c << ' ';
        os << m.variables[t.var].name;
        first = false;
    }
    if (first) os << "0";
}

const char* relation_text(Relation r) {
    switch (r) {
        case Relation::LessEqual: return "<=";
        case Relation::GreaterEqual: return ">=";
        case Relation::Equal: return "=";
    }
    return "=";
}

}  // namespace

std::string write_lp(const LpModel& model) {
    if (!model.valid()) throw InputError("write_lp: invalid model");
    std::ostringstream os;
    os << (model.sense == Sense::Minimize ? "Minimize" : "Maximize") << "\n obj: ";
    write_terms(os, model, model.objective);
    os << "\nSubject To\n";
    for (const auto& c : model.constraints) {
        os << ' ' << c.name << ": ";
        write_terms(os, model, c.terms);
        os << ' ' << relation_text(c.relation) << ' ' << c.rhs << '\n';
    }
    bool any_continuous = false, any_binary = false, any_general = false;
    for (const auto& v : model.variables) {
        const bool binary = v.integer && v.lower == 0 && v.upper == 1;
        any_binary |= binary;
        any_general |= v.integer && !binary;
        any_continuous |= !binary;
    }
    if (any_continuous) {
        os << "Bounds\n";
        for (const auto& v : model.variables)
            if (!(v.integer && v.lower == 0 && v.upper == 1))
                os << ' ' << v.lower << " <= " << v.name << " <= " << v.upper << '\n';
    }
    if (any_binary) {
        os << "Binary\n";
        for (const auto& v : model.variables)
            if (v.integer && v.lower == 0 && v.upper == 1) os << ' ' << v.name << '\n';
    }
    if (any_general) {
        os << "General\n";
        for (const auto& v : model.variables)
            if (v.integer && !(v.lower == 0 && v.upper == 1)) os << ' ' << v.name << '\n';
    }
    os << "End\n";
    return os.str();
}

Evaluation evaluate(const LpModel& model, const std::vector<Rational>& assignment) {
    if (assignment.size() != model.variables.size())
        throw InputError("evaluate: assignment has " + std::to_string(assignment.size()) + " values, model has " +
                         std::to_string(model.variables.size()) + " variables");
    Evaluation e;
    for (const auto& t : model.objective) e.objective += Rational(t.coef) * assignment[t.var];
    e.feasible = true;
    for (std::size_t i = 0; i < model.variables.size() && e.feasible; ++i) {
        const auto& v = model.variables[i];
        const Rational& x = assignment[i];
        if (x < Rational(v.lower) || x > Rational(v.upper) || (v.integer && !x.is_integer())) e.feasible = false;
    }
    for (const auto& c : model.constraints) {
        if (!e.feasible) break;
        Rational lhs;
        for (const auto& t : c.terms) lhs += Rational(t.coef) * assignment[t.var];
        const Rational rhs(c.rhs);
        switch (c.relation) {
            case Relation::LessEqual: e.feasible = lhs <= rhs; break;
            case Relation::GreaterEqual: e.feasible = lhs >= rhs; break;
            case Relation::Equal: e.feasible = lhs == rhs; break;
        }
    }
    return e;
}

Evaluation evaluate(const LpModel& model, const std::map<std::string, Rational>& assignment) {
    std::vector<Rational> values(model.variables.size());
    for (std::size_t i = 0; i < model.variables.size(); ++i) {
        auto it = assignment.find(model.variables[i].name);
        if (it == assignment.end()) throw InputError("evaluate: missing value for " + model.variables[i].name);
        values[i] = it->second;
    }
    return evaluate(model, values);
}

namespace {

constexpr std::size_t kMaxEnumeration = 22;

std::vector<std::uint32_t> closed_masks(const Graph& g) {
    std::vector<std::uint32_t> masks(g.n(), 0);
    for (std::size_t v = 0; v < g.n(); ++v)
        for (Vertex u : closed_neighbourhood(g, static_cast<Vertex>(v)).members()) masks[v] |= std::uint32_t{1} << u;
    return masks;
}

}  // namespace

// Fixing y, the cheapest feasible x sets x_v = 1 exactly where N[v] has no y,
// so scanning y alone covers every candidate optimum of the 0/1 model.
Rational integer_optimum_primal(const Graph& g) {
    const std::size_t n = g.n();
    if (n > kMaxEnumeration) throw SizeCapError("integer_optimum_primal", n, kMaxEnumeration);
    if (n == 0) return Rational(0);
    const LpModel model = build_rdp_ilp(g, false);
    const auto masks = closed_masks(g);
    std::optional<Rational> best;
    std::vector<Rational> point(2 * n);
    for (std::uint32_t y = 0; y < (std::uint32_t{1} << n); ++y) {
        for (std::size_t v = 0; v < n; ++v) {
            point[n + v] = Rational((y >> v) & 1);
            point[v] = Rational((masks[v] & y) ? 0 : 1);
        }
        const Evaluation e = evaluate(model, point);
        if (e.feasible && (!best || e.objective < *best)) best = e.objective;
    }
    return *best;
}

Rational integer_optimum_dual(const Graph& g) {
    const std::size_t n = g.n();
    if (n > kMaxEnumeration) throw SizeCapError("integer_optimum_dual", n, kMaxEnumeration);
    const LpModel model = build_tnp_dual(g, true);
    Rational best(0);
    std::vector<Rational> point(n);
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << n); ++a) {
        for (std::size_t v = 0; v < n; ++v) point[v] = Rational((a >> v) & 1);
        const Evaluation e = evaluate(model, point);
        if (e.feasible && e.objective > best) best = e.objective;
    }
    return best;
}

}  // namespace tnp
