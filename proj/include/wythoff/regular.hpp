#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wythoff/decoration.hpp"
#include "wythoff/diagram.hpp"
#include "wythoff/face_lattice.hpp"
#include "wythoff/geometry.hpp"

namespace wythoff {

/// A face reachable from the start decoration, as its own decorated diagram.
struct FaceWitness {
  Decoration012 decoration;
  DecoratedDiagram face;   ///< D restricted to S, marks from f0
  std::string name;        ///< "square", "3-simplex", or the face diagram
};

struct RegularVerdict {
  bool regular = false;
  std::string name;    ///< catalog name when regular
  std::string rule;    ///< which case fired, e.g. "B-4end", "D4-centre"
  int witness_rank = -1;
  std::vector<FaceWitness> witness;   ///< two faces of witness_rank, larger first
  std::string text() const;           ///< "regular: 3-hypercube" / "not regular: 2-faces square vs triangle"
};

/// Case analysis on the diagram shape and ring position. Negative verdicts
/// carry two non-isomorphic faces of equal rank when `with_witness`. Throws
/// Degenerate.
RegularVerdict is_regular_ruled(const DecoratedDiagram& d, bool with_witness = true);

/// Rules whose positive verdicts G alone cannot confirm, because G is a proper
/// subgroup of the symmetry group.
bool oracle_whitelisted(const std::string& rule);

struct OracleResult {
  std::size_t flags = 0;
  std::size_t orbits = 0;
  bool transitive() const { return orbits == 1; }
};
/// Flag orbits under the left action of the simple reflections.
OracleResult flag_orbits(const FaceLattice& l, const FlagGraph& flags);
OracleResult flag_orbits(const FaceLattice& l);
bool is_regular_oracle(const FaceLattice& l);
/// Flag orbits under the simple reflections together with every symmetric
/// ridge reflection, acting through vertex permutations.
OracleResult augmented_flag_orbits(const FaceLattice& l, const Realization& r, const FlagGraph& flags);

/// Ruled verdict checked against the oracle: agreement, or a whitelisted rule
/// whose augmented oracle is transitive.
struct OracleAgreement {
  RegularVerdict ruled;
  OracleResult plain;
  std::optional<OracleResult> augmented;
  bool agree = false;
  bool whitelisted = false;
};
OracleAgreement compare_with_oracle(const DecoratedDiagram& d, std::size_t budget = kDefaultBudget);
/// Same, reusing a built lattice, its flags and its coordinates.
OracleAgreement compare_with_oracle(const FaceLattice& l, const FlagGraph& flags, const Realization& r);

/// Isomorphism-invariant key of a decorated diagram (tree canonization per
/// component, components sorted).
std::string canonical_key(const DecoratedDiagram& d);

/// Proxy for polytope isomorphism: the f-vector and, per rank, the multiset of
/// face f-vectors.
std::string face_signature(const DecoratedDiagram& d);

struct CatalogEntry {
  std::string name;
  std::string alias;
  int dimension = 0;
  DecoratedDiagram diagram;           ///< first construction
  FVector f_vector;                   ///< closed form for the name
  std::vector<DecoratedDiagram> constructions;   ///< distinct up to isomorphism
  bool verified = false;              ///< oracle and enumerated f-vector checked
  std::string display() const { return alias.empty() ? name : name + " (" + alias + ")"; }
};

struct ClassifyOptions {
  int kmax = 12;
  /// Build lattices and run the oracle; defaults to n in {3,4}.
  std::optional<bool> verify;
  std::size_t budget = kDefaultBudget;
};

/// Every finite-type diagram of rank n (I2(k) up to kmax) with every
/// non-degenerate decoration; the positive ruled verdicts, grouped by name.
std::vector<CatalogEntry> classify(int n, const ClassifyOptions& options = {});

/// Closed-form f-vector for a catalog name; nullopt for unknown names.
std::optional<FVector> expected_f_vector(const std::string& name, int dimension);

/// Catalog entry by name or alias. Throws UnknownName.
CatalogEntry find_entry(const std::string& name, int kmax = 12);
/// All constructions of a named polytope. Throws UnknownName.
std::vector<DecoratedDiagram> multi_construction_report(const std::string& name, int kmax = 12);

/// Structured catalog document.
std::string catalog_document(const std::vector<CatalogEntry>& entries);

std::string polygon_name(int p);

}  // namespace wythoff
