#pragma once

#include <stdexcept>

namespace rookrank {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument exceeds a configured limit (factorial argument, permanent size, ...).
struct capacity_error : error {
    using error::error;
};

// Rank or index outside [1, |family|], or a word step past the alphabet.
struct index_out_of_range : error {
    using error::error;
};

// rank() was asked about a word that is not in the family.
struct not_a_member : error {
    using error::error;
};

// A prefix with repeated letters (or otherwise unusable) where a valid one is required.
struct invalid_prefix : error {
    using error::error;
};

// Boards passed to disjoint_product share a row or column.
struct not_disjoint : error {
    using error::error;
};

// A complement polynomial whose degree exceeds the board size.
struct inconsistent_input : error {
    using error::error;
};

// Sampling from a family with no members.
struct empty_family : error {
    using error::error;
};

// Recurrence detection needs more terms than were provided.
struct insufficient_data : error {
    using error::error;
};

}  // namespace rookrank
