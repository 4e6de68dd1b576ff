#pragma once

#include <string>
#include <vector>

#include "heun/expr.hpp"
#include "heun/pipeline.hpp"

namespace heun {

struct Table1Row {
    int index = 0;
    FieldSpec field;
    std::vector<std::string> params;  // subset of {a, b, c}
    std::string jref;                 // "", "weierstrass" or "1b:<label>"
    ExprPtr q, t, th1, th2, th3, th4, th42, th41;
};

enum class FamilyConstraint { none, gamma_two_thirds, beta_half_shift };

struct Table1bRow {
    std::string label;
    FieldSpec field;
    FamilyConstraint constraint = FamilyConstraint::none;
    Poly j_num, j_den;  // as printed (scale carried by the leading coefficients)
    std::vector<long> ram0, ram1, raminf;  // raminf includes the infinity order
    ExprPtr q, t, th1, th2, th3, th42, th41;
};

struct Table2Row {
    std::string label;
    int parent = 0;
    FieldSpec field;
    std::vector<std::pair<std::string, ExprPtr>> conditions;
    std::string free_param;  // "" when the conditions pin every parameter
    ExprPtr q, t, theta, th4, th42, th41;
};

struct WeierstrassFixture {
    std::string label;
    FieldSpec field;
    int table1_row = 0;
    Poly g2, g3;
    Poly printed_j_num, printed_j_den, printed_jm1_num, printed_jm1_den;
    std::vector<long> ram0, ram1, raminf;
    ExprPtr alpha, beta, gamma;
    ExprPtr pull_p1, pull_p2, gauge_dlog, heun_p1, heun_p2;
    std::vector<Rational> samples;
};

struct Fixtures {
    std::vector<Table1Row> table1;
    std::vector<Table1bRow> table1b;
    std::vector<Table2Row> table2;
    WeierstrassFixture weierstrass;

    const Table1Row& table1_row(int index) const;
    const Table1bRow& table1b_row(const std::string& label) const;
};

Fixtures load_fixtures(const std::string& dir = "fixtures");

struct Report {
    std::string table, row, stage;
    bool pass = false;
    bool quarantined = false;
    std::string detail;
};

// Default parameter samples {1/5, 1/7, 2/9}; the environment variable
// HEUN_SAMPLES ("r1,r2,r3") overrides them.
std::vector<Rational> default_samples();

std::vector<Report> verify_table1_row(const Fixtures& fx, const Table1Row& row,
                                      const std::vector<Rational>& samples);
std::vector<Report> verify_table1b_row(const Table1bRow& row);
std::vector<Report> verify_table2_row(const Fixtures& fx, const Table2Row& row);
std::vector<Report> verify_weierstrass(const Fixtures& fx);
std::vector<Report> verify_all(const Fixtures& fx);

// True when every non-quarantined report passed.
bool all_passed(const std::vector<Report>& reports);

// Constraint-column wiring: the (A, B, C) slots used for the pullback.
void constraint_slots(FamilyConstraint c, IndexConstraint& A, IndexConstraint& B,
                      IndexConstraint& C);

// Parameter samples for a family row, skipping degenerate tuples.
std::vector<HypergeometricParams> family_samples(const Table1bRow& row, int want);

// The Gauss parameters of the one-parameter catalogue: (1/3 - a/2, a/2 - 1/6, 2/3).
HypergeometricParams one_parameter_gauss(const Rational& a);

// Exact 7-tuple match of a Heun equation against the normalization orbit of
// the pulled-back operator (the published tables sometimes chose a
// non-canonical arrangement).  theta4 labelling follows the alpha*N exponent
// when the point at infinity stays put; otherwise both labellings count.
bool orbit_matches(const BelyiMap& m, const HypergeometricParams& p, const FieldSpec& fs,
                   const HeunEquation& expected);

}  // namespace heun
