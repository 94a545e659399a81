// Families, rays, corays and tubes.
//
// Modules of one component fall into families: the members of a string
// family share their endpoint type (normalized labels) and their dimensions
// step by h.  Regular families live in one of the two exceptional tubes; a
// tube of rank r contains exactly r^2 families.
//
// Rays walk up a tube through irreducible monomorphisms (add_hook on the
// unique admissible side of a regular string), corays walk down through
// irreducible epimorphisms (delete_cohook on the unique outgoing side).
// build_tube lays out an exceptional tube as a grid: row 0 is the mouth
// (quasi-simples, modules with no epi step), row j+1 applies the ray step to
// row j.  Every mesh of the tube yields an almost split sequence
//   0 -> A -> B1 (+) B2 -> C -> 0
// with B1 the ray successor of A, C the coray predecessor of B1, and B2 the
// coray predecessor of A (absent at the mouth).  Homogeneous tubes have the
// analogous meshes H[q] -> H[q+1] (+) H[q-1] -> H[q].

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aetilde/grcompute.hpp"
#include "aetilde/strings.hpp"

namespace aet {

struct Family {
  QuiverSpec quiver;
  bool homogeneous = false;
  // String families only:
  std::string left, right;   // normalized endpoint labels
  ComponentClass cls = ComponentClass::HomogeneousRegular;
  long long lo0 = 0, hi0 = 0;  // smallest member
  int base_dim = 0;            // its dimension (in [1, h]); members step by h

  // "ce" for string families, "H" for the homogeneous one.
  std::string key() const { return homogeneous ? "H" : left + right; }
};

Family family_of(const StringModule& m);
Family homogeneous_family(const QuiverSpec& q);

// Member with dimension base_dim + index*h (index >= 0); string families.
StringModule family_member(const Family& f, int index);
// Smallest index whose member has dimension >= dim.
int family_index_at_least(const Family& f, int dim);

// All families of the quiver, exceptional tubes and preprojective /
// preinjective components plus the homogeneous marker, keyed uniquely.
std::vector<Family> all_families(const QuiverSpec& q);

// Irreducible mono step up the ray.  Regular strings have a unique
// admissible side; preprojective strings grow on either side (pass it
// explicitly); preinjective strings admit no mono step (NoMonoStep).
StringModule ray_successor(const StringModule& m);
StringModule ray_successor(const StringModule& m, Side side);

// Irreducible epi step down the coray.  Regular strings have a unique
// outgoing side; at the mouth the cohook would consume the module and
// NoEpiStep is thrown, as it is for preprojective strings (no outgoing
// side).  Preinjective strings shrink on either side (pass it explicitly).
StringModule coray_predecessor(const StringModule& m);
StringModule coray_predecessor(const StringModule& m, Side side);

bool is_quasi_simple(const StringModule& m);

enum class TubeKind { LeftTube, RightTube, Homogeneous };

std::string to_string(TubeKind k);

struct Tube {
  QuiverSpec quiver;
  TubeKind kind = TubeKind::Homogeneous;
  int rank = 1;
  // grid[j][i]: quasi-length j+1 module on the ray from mouth module i;
  // empty for homogeneous tubes (their modules are the H[q]).
  std::vector<std::vector<StringModule>> grid;

  const std::vector<StringModule>& mouth() const { return grid.front(); }
};

// Lay out a tube to the given number of rows (depth >= 1).
Tube build_tube(const QuiverSpec& q, TubeKind kind, int depth);

// One almost split sequence 0 -> A -> B1 (+) B2 -> C -> 0.  For homogeneous
// tubes the members are H[qlen] etc. and the string fields are unused.
struct ARSequence {
  bool homogeneous = false;
  QuiverSpec quiver;  // set for homogeneous meshes
  int qlen = 0;       // A = H[qlen], B1 = H[qlen+1], B2 = H[qlen-1] if qlen > 1
  StringModule A, B1, C;
  std::optional<StringModule> B2;
};

// All meshes of the tube with A of quasi-length < depth.
std::vector<ARSequence> ar_sequences(const Tube& t, int depth);

// The distinct families meeting the tube (rank^2 of them once depth >= rank).
std::vector<Family> tube_families(const Tube& t);

}  // namespace aet
