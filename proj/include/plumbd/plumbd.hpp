#pragma once

// Exact computation of Heegaard Floer d-invariants of negative-definite
// plumbed rational homology spheres, with the lattice grading machinery and
// graded roots behind them.

#include "plumbd/charvec.hpp"
#include "plumbd/dinvariant.hpp"
#include "plumbd/errors.hpp"
#include "plumbd/graded_root.hpp"
#include "plumbd/grading.hpp"
#include "plumbd/graph.hpp"
#include "plumbd/io.hpp"
#include "plumbd/linalg.hpp"
#include "plumbd/optimizer.hpp"
#include "plumbd/plumbing.hpp"
#include "plumbd/random_trees.hpp"
#include "plumbd/rational.hpp"
#include "plumbd/spinc.hpp"
#include "plumbd/verify.hpp"
