#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitcy/endoalg.hpp"
#include "orbitcy/fdalg.hpp"
#include "orbitcy/orbitcat.hpp"
#include "orbitcy/rigid.hpp"

namespace orbitcy {

struct Sweep {
  int n_max = 4;   // A(n,1) and A(n,t)
  int t_max = 3;   // A(n,t) with 2 <= t, Dfam(n,t) with 1 <= t
  int k_max = 10;  // Dk(k,n) with 1 < k <= k_max and 4 <= kn <= kn_max
  int kn_max = 10;
  int dfam_n_max = 3;
  bool exceptional = true;  // E8t4, E8t8, E7t2, E7t5
};

struct TableCounts {
  int indecomposables = 0;
  int rank = 0;  // summands of every maximal rigid
  int rigids = 0;
  bool cluster_tilting = false;  // maximal rigids are cluster tilting
  std::string presentation;      // quiver arrows and relations
};

// One preset against its closed-form row. The presentation check passes when
// End(T) is isomorphic to the target for some maximal rigid T; for E7t5 every
// maximal rigid is checked.
struct TableRow {
  int table = 1;  // 1: cluster tilting family, 2: maximal rigid, not cluster tilting
  std::string preset;
  TableCounts expected;
  TableCounts computed;
  int maximal_rigids = 0;
  int presentation_matches = 0;  // maximal rigids whose End is iso to the target
  int presentation_tried = 0;
  std::string presentation_note;
  bool pass = false;
};

TableRow verify_row(int table, const std::string& preset, const TableCounts& expected, const QuiverPresentation& target,
                    bool every_maximal_rigid = false);
std::vector<TableRow> verify_tables(const Sweep& sweep = {});
std::string tables_json(const std::vector<TableRow>& rows);

// Dimension-level evidence that sigma induces R_C ~ R_D between the
// subcategories of rigid objects.
struct ComparisonReport {
  std::string left;
  std::string right;
  bool sigma_found = false;
  std::vector<int> sigma;  // left rigid position -> right rigid position
  std::vector<int> t;      // object ids in the left category
  std::vector<int> u;      // object ids in the right category
  std::map<std::string, bool> checks;
  std::map<std::string, std::string> assumed;
  std::string failure;
  bool supports_equivalence = false;

  std::string to_json(const OrbitCategory& c, const OrbitCategory& d, const RigidSet& rc, const RigidSet& rd) const;
};

// Searches quiver isomorphisms Q_{R_C} -> Q_{R_D} (identity first) that
// commute with Sigma and preserve dim Hom(X, Sigma^s Y) for s = 0, 1, then a
// maximal rigid T (cluster tilting ones first) whose image U is maximal rigid
// with End(T) ~ End(U). Shift closure is required on both sides.
ComparisonReport compare(const OrbitCategory& c, const OrbitCategory& d, int sigma_budget = 20000);
std::string comparison_json(const OrbitCategory& c, const OrbitCategory& d, const ComparisonReport& r);

struct GorensteinDemo {
  int dim = 0;
  std::vector<std::vector<int>> coresolution;
  int injective_dimension = -1;
  int opposite_dimension = -1;  // pd of D(A) over the opposite algebra
  bool omega_fixes_s2 = false;
  int st_s2_x = 0;
  int st_x_s2 = 0;
  WitnessReport witness;
  std::vector<WitnessReport> lambda_controls;  // n = 1..4
  std::vector<std::string> lines;
  bool pass = false;
};

// The Gorenstein algebra beta*alpha - gamma*beta, alpha^2, gamma^2 and its
// stable category: coresolution, cosyzygy, stable Hom asymmetry, witness, and
// the Lambda_n controls.
GorensteinDemo gorenstein_demo();

}  // namespace orbitcy
