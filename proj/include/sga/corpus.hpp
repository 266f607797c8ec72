#ifndef SGA_CORPUS_HPP
#define SGA_CORPUS_HPP

// Corpus generation for the verification harness: exhaustive enumeration of
// small groupoids (by composition-table search with canonical deduplication)
// and of all valid partial actions on them, plus seeded random corpora.

#include "sga/partial_action.hpp"

namespace sga {

/// All groupoids with at most max_morphisms morphisms, one representative
/// per isomorphism class.  Enumerates unit counts, source/range assignments,
/// inverse involutions and composition tables with pruning, validates each
/// candidate, and deduplicates by minimal relabeling.
std::vector<Groupoid> enumerate_groupoids(int max_morphisms);

/// All valid partial actions of g on point sets of size at most max_points,
/// deduplicated under point relabeling.
std::vector<PartialAction> enumerate_actions(const Groupoid& g, int max_points);

/// The exhaustive micro-corpus: every action of every groupoid within the
/// bounds.
std::vector<PartialAction> micro_corpus(int max_morphisms, int max_points);

/// Seeded random corpus of the given size.
std::vector<PartialAction> random_corpus(std::uint64_t seed, int count,
                                         const ActionBounds& bounds);

} // namespace sga

#endif
