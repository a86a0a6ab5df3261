#pragma once

// Initial extended exchange matrix attached to a reduced word.

#include "clustertrop/exchange_matrix.hpp"
#include "clustertrop/rootsys.hpp"

namespace clustertrop {

/// Rows J_uf, columns J = {1..m}:
///   eps_{r,s} = -1              if r = s^+
///             = -a_{i_s,i_r}    if s < r < s^+ < r^+
///             = 1               if r^+ = s
///             = a_{i_s,i_r}     if r < s < r^+ < s^+
///             = 0               otherwise.
/// d_j is the column symmetrizer of the Cartan matrix at i_j.
/// Throws std::invalid_argument for a non-reduced word.
ExchangeMatrix gls_exchange_matrix(const CartanMatrix& c, const WeylWord& w);

}  // namespace clustertrop
