#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace solvline {

struct PropertyResult {
  std::string name;
  std::size_t samples = 0;
  bool pass = false;
  long long millis = 0;
  std::string detail;  // first violation, when any
};

struct Property {
  std::string name;
  std::function<PropertyResult(std::uint64_t seed)> run;
};

/// Every module's invariant suite, in a fixed order.
std::vector<Property> standard_properties();

/// Runs the properties, writing one TSV row (property, samples, verdict,
/// millis) per entry. Stops at the first violation when fail_fast is set.
std::vector<PropertyResult> run_properties(const std::vector<Property>& props,
                                           std::uint64_t seed, std::ostream* tsv,
                                           bool fail_fast);

/// Full suite; returns overall success.
bool verify_all(std::uint64_t seed, std::ostream& out);

// Individual checks shared with the acceptance suite. Each returns a filled
// PropertyResult (name, samples, verdict).
PropertyResult check_wreath_associativity(std::uint64_t seed, std::size_t samples);
PropertyResult check_presentation(long long range);
PropertyResult check_action_law(std::uint64_t seed, std::size_t samples);
PropertyResult check_fitting_predicate(std::uint64_t seed, std::size_t samples);
PropertyResult check_order_invariance(std::uint64_t seed, std::size_t samples_per_tag);
PropertyResult check_order_totality(std::uint64_t seed, std::size_t samples);
PropertyResult check_between(std::uint64_t seed, std::size_t samples);
PropertyResult check_compare_b(std::uint64_t seed, std::size_t samples);
PropertyResult check_xi0_freeness(std::uint64_t seed, std::size_t samples);
PropertyResult check_noncrossing(std::uint64_t seed, std::size_t samples);
PropertyResult check_claim1(std::uint64_t seed, std::size_t polys_per_cell);
PropertyResult check_discreteness(std::uint64_t seed, std::size_t samples);
PropertyResult check_tree_axioms(std::uint64_t seed, std::size_t samples);
PropertyResult check_horograding_equivariance(std::uint64_t seed, std::size_t samples);
PropertyResult check_quotient_equivariance(std::uint64_t seed, std::size_t samples);
PropertyResult check_germ_equivariance(std::uint64_t seed, std::size_t samples);
PropertyResult check_branching_transitivity(std::uint64_t seed, std::size_t samples);
PropertyResult check_cut_saturation(std::uint64_t seed, std::size_t samples);
PropertyResult check_realization_determinism(std::size_t depth);
PropertyResult check_realization_order(std::size_t depth);
PropertyResult check_realization_equivariance(std::uint64_t seed, std::size_t depth,
                                              std::size_t elements);
PropertyResult check_sigma_injectivity(std::size_t depth);
PropertyResult check_minimality_probe(std::uint64_t seed, std::size_t samples);
PropertyResult check_orbit_density(std::size_t depth);
PropertyResult check_affine_classifier(std::uint64_t seed, std::size_t samples);
PropertyResult check_element_typing(std::uint64_t seed, std::size_t samples);
PropertyResult check_classify_pl_corpus(std::uint64_t seed, std::size_t corpus);
PropertyResult check_disjointness_suite(std::size_t max_total);
PropertyResult check_growth_predicate(std::uint64_t seed, std::size_t triples);
PropertyResult check_domination(std::uint64_t seed, std::size_t samples);
PropertyResult check_bconfig_invariance(std::uint64_t seed, std::size_t samples);
PropertyResult check_tau_automorphism(std::uint64_t seed, std::size_t samples);
PropertyResult check_bcut_embedding(std::uint64_t seed, std::size_t samples);
PropertyResult check_stabilization(std::uint64_t seed, std::size_t pairs, std::size_t cap);
PropertyResult check_plante_window_label(std::size_t realization_depth, std::size_t depth);

}  // namespace solvline
