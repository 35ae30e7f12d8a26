#include "wrnet/simplex.hpp"

#include "wrnet/errors.hpp"

namespace wrnet {

std::string to_string(LpStatus s)
{
    switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

std::size_t LinProgram::add_variable(std::string name, std::optional<Rational> lower,
                                     std::optional<Rational> upper)
{
    variables_.push_back({std::move(name), std::move(lower), std::move(upper)});
    objective_.resize(variables_.size());
    return variables_.size() - 1;
}

void LinProgram::add_constraint(RatVec row, Relation relation, Rational rhs)
{
    constraints_.push_back({std::move(row), relation, std::move(rhs)});
}

void LinProgram::add_sparse(const std::vector<std::pair<std::size_t, Rational>>& terms,
                            Relation relation, Rational rhs)
{
    RatVec row = zeros(variables_.size());
    for (const auto& [var, coef] : terms) {
        if (var >= row.size()) throw PreconditionError("constraint references undeclared variable");
        row[var] += coef;
    }
    add_constraint(std::move(row), relation, std::move(rhs));
}

void LinProgram::set_objective(RatVec row, Sense sense)
{
    objective_ = std::move(row);
    sense_ = sense;
}

void LinProgram::set_objective_coefficient(std::size_t var, Rational coefficient)
{
    objective_.at(var) = std::move(coefficient);
}

void LinProgram::validate() const
{
    const auto n = variables_.size();
    if (objective_.size() != n) throw PreconditionError("objective length does not match variables");
    for (std::size_t i = 0; i < constraints_.size(); ++i)
        if (constraints_[i].row.size() != n)
            throw PreconditionError("constraint " + std::to_string(i) + " has " +
                                    std::to_string(constraints_[i].row.size()) +
                                    " coefficients for " + std::to_string(n) + " variables");
    for (const auto& v : variables_)
        if (v.lower && v.upper && *v.lower > *v.upper)
            throw PreconditionError("variable '" + v.name + "' has lower bound above upper bound");
}

namespace {

// x_j = offset + sum over (column, coefficient) of standard-form columns.
struct VarMap
{
    Rational offset;
    std::vector<std::pair<std::size_t, int>> columns;
};

class Tableau
{
public:
    Tableau(std::vector<RatVec> rows, std::vector<std::size_t> basis, std::size_t cols)
        : rows_(std::move(rows)), basis_(std::move(basis)), cols_(cols), obj_(zeros(cols + 1))
    {
    }

    void set_costs(const RatVec& cost)
    {
        obj_ = zeros(cols_ + 1);
        for (std::size_t j = 0; j < cols_; ++j) obj_[j] = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j)
                if (rows_[i][j] != 0) obj_[j] -= cb * rows_[i][j];
        }
    }

    // Returns false when the program is unbounded in the current phase.
    bool optimize(const std::vector<bool>& allowed)
    {
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j)
                if (allowed[j] && obj_[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == cols_) return true;

            std::size_t leave = rows_.size();
            Rational best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rational ratio = rows_[i][cols_] / rows_[i][enter];
                if (leave == rows_.size() || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == rows_.size()) return false;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t c)
    {
        Rational inv = 1 / rows_[r][c];
        for (auto& x : rows_[r])
            if (x != 0) x *= inv;
        auto eliminate = [&](RatVec& row) {
            if (row[c] == 0) return;
            Rational f = row[c];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (rows_[r][j] != 0) row[j] -= f * rows_[r][j];
        };
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != r) eliminate(rows_[i]);
        eliminate(obj_);
        basis_[r] = c;
    }

    void drop_row(std::size_t r)
    {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

    Rational objective_value() const { return -obj_[cols_]; }
    std::size_t num_rows() const { return rows_.size(); }
    std::size_t basic(std::size_t i) const { return basis_[i]; }
    const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    RatVec column_values() const
    {
        RatVec v = zeros(cols_);
        for (std::size_t i = 0; i < rows_.size(); ++i) v[basis_[i]] = rows_[i][cols_];
        return v;
    }

private:
    std::vector<RatVec> rows_;
    std::vector<std::size_t> basis_;
    std::size_t cols_;
    RatVec obj_;
};

}  // namespace

LpSolution simplex_solve(const LinProgram& program)
{
    program.validate();
    const auto& vars = program.variables();
    const std::size_t n = vars.size();

    // Structural columns.
    std::vector<VarMap> map(n);
    std::size_t ncols = 0;
    struct Extra
    {
        std::size_t column;
        Rational bound;
    };
    std::vector<Extra> upper_rows;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& v = vars[j];
        if (v.lower) {
            map[j].offset = *v.lower;
            map[j].columns.push_back({ncols, +1});
            if (v.upper) upper_rows.push_back({ncols, *v.upper - *v.lower});
            ++ncols;
        } else if (v.upper) {
            map[j].offset = *v.upper;
            map[j].columns.push_back({ncols++, -1});
        } else {
            map[j].offset = 0;
            map[j].columns.push_back({ncols++, +1});
            map[j].columns.push_back({ncols++, -1});
        }
    }
    const std::size_t structural = ncols;

    // Rows over structural columns, with relation and rhs.
    struct Row
    {
        RatVec coef;
        Relation rel;
        Rational rhs;
    };
    std::vector<Row> rows;
    for (const auto& c : program.constraints()) {
        Row r{zeros(structural), c.relation, c.rhs};
        for (std::size_t j = 0; j < n; ++j) {
            if (c.row[j] == 0) continue;
            r.rhs -= c.row[j] * map[j].offset;
            for (auto [col, s] : map[j].columns) r.coef[col] += s * c.row[j];
        }
        rows.push_back(std::move(r));
    }
    for (const auto& u : upper_rows) {
        Row r{zeros(structural), Relation::LessEqual, u.bound};
        r.coef[u.column] = 1;
        rows.push_back(std::move(r));
    }

    const std::size_t m = rows.size();
    std::size_t slacks = 0;
    for (const auto& r : rows)
        if (r.rel != Relation::Equal) ++slacks;
    const std::size_t first_artificial = structural + slacks;
    const std::size_t total = first_artificial + m;

    std::vector<RatVec> tab(m, zeros(total + 1));
    std::vector<std::size_t> basis(m);
    std::size_t next_slack = structural;
    for (std::size_t i = 0; i < m; ++i) {
        auto& r = rows[i];
        for (std::size_t j = 0; j < structural; ++j) tab[i][j] = r.coef[j];
        if (r.rel == Relation::LessEqual) tab[i][next_slack++] = 1;
        if (r.rel == Relation::GreaterEqual) tab[i][next_slack++] = -1;
        tab[i][total] = r.rhs;
        if (r.rhs < 0)
            for (auto& x : tab[i]) x = -x;
        tab[i][first_artificial + i] = 1;
        basis[i] = first_artificial + i;
    }

    Tableau t(std::move(tab), std::move(basis), total);

    // Phase 1: minimise the sum of artificials.
    RatVec cost1 = zeros(total);
    for (std::size_t i = 0; i < m; ++i) cost1[first_artificial + i] = 1;
    t.set_costs(cost1);
    std::vector<bool> allowed(total, true);
    t.optimize(allowed);
    LpSolution out;
    if (t.objective_value() > 0) {
        out.status = LpStatus::Infeasible;
        return out;
    }

    // Drive zero-valued artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < t.num_rows();) {
        if (t.basic(i) < first_artificial) {
            ++i;
            continue;
        }
        std::size_t col = first_artificial;
        for (std::size_t j = 0; j < first_artificial; ++j)
            if (t.at(i, j) != 0) {
                col = j;
                break;
            }
        if (col == first_artificial) {
            t.drop_row(i);
        } else {
            t.pivot(i, col);
            ++i;
        }
    }

    // Phase 2.
    RatVec cost2 = zeros(total);
    const bool maximize = program.sense() == Sense::Maximize;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& c = program.objective()[j];
        if (c == 0) continue;
        for (auto [col, s] : map[j].columns) cost2[col] += Rational(maximize ? -s : s) * c;
    }
    t.set_costs(cost2);
    for (std::size_t j = first_artificial; j < total; ++j) allowed[j] = false;
    if (!t.optimize(allowed)) {
        out.status = LpStatus::Unbounded;
        return out;
    }

    auto cols = t.column_values();
    out.assignment = zeros(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational x = map[j].offset;
        for (auto [col, s] : map[j].columns) x += s * cols[col];
        out.assignment[j] = x;
    }
    out.objective_value = dot(program.objective(), out.assignment);
    out.status = LpStatus::Optimal;
    return out;
}

bool satisfies(const LinProgram& program, const RatVec& x)
{
    if (x.size() != program.num_variables()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const auto& v = program.variables()[j];
        if (v.lower && x[j] < *v.lower) return false;
        if (v.upper && x[j] > *v.upper) return false;
    }
    for (const auto& c : program.constraints()) {
        Rational lhs = dot(c.row, x);
        switch (c.relation) {
        case Relation::LessEqual:
            if (lhs > c.rhs) return false;
            break;
        case Relation::Equal:
            if (lhs != c.rhs) return false;
            break;
        case Relation::GreaterEqual:
            if (lhs < c.rhs) return false;
            break;
        }
    }
    return true;
}

}  // namespace wrnet
