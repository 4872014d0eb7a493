#ifndef PIPEDREAMS_ERRORS_HPP
#define PIPEDREAMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pipedreams {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two permutations of different sizes were combined.
struct SizeMismatch : Error { using Error::Error; };

// A shape failed validation; the message names the violated clause.
struct InvalidShape : Error { using Error::Error; };

// A filling routes some pipe off the shape through a non-ending boundary edge.
struct InvalidFilling : Error { using Error::Error; };

// Flip requested on a tile with no crossing between its two pipes,
//or on a single-strand tile.
struct NotFlippable : Error { using Error::Error; };

// Linear extensions requested for a pipe dream whose extended contact
// graph has a directed cycle.
struct CyclicGraph : Error { using Error::Error; };

// The exit permutation admits no pipe dream on the given shape.
struct NotSortable : Error { using Error::Error; };

// The permutation to insert is not below the exit permutation in weak order.
struct NotBelow : Error { using Error::Error; };

// Acyclic-order operations on pipe dreams with different shapes or exits.
struct DifferentContext : Error { using Error::Error; };

// Complete-shape verification requested on a shape that is not complete.
struct NotComplete : Error { using Error::Error; };

// An internal invariant failed; indicates a bug, not bad input.
struct InternalInconsistency : Error { using Error::Error; };

}  // namespace pipedreams

#endif
