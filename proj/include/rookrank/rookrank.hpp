#pragma once

// Ranking, unranking, counting and uniform sampling of restricted
// permutations (derangements and menage permutations) in lexicographic
// order, driven by prefix counting over rook-theory boards; plus a small
// lab for counting Lyndon word prefixes and Euler-transforming the results.

#include "count.hpp"
#include "derangement.hpp"
#include "engine.hpp"
#include "error.hpp"
#include "family.hpp"
#include "lyndon.hpp"
#include "menage.hpp"
#include "polynomial.hpp"
#include "rook.hpp"
#include "word.hpp"
