#ifndef SQFREE_SQFREE_HPP_
#define SQFREE_SQFREE_HPP_

// Square-free words over {a, b, c}, finite test sets for square-free
// morphic images, and the search tools built on them.

#include "analysis.hpp"
#include "error.hpp"
#include "factors.hpp"
#include "morphism.hpp"
#include "search.hpp"
#include "squares.hpp"
#include "thue_words.hpp"
#include "word.hpp"

#endif  // SQFREE_SQFREE_HPP_
