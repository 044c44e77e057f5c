#pragma once

#include "lamcount/term.hpp"
#include "lamcount/trees.hpp"

namespace lamcount {

/// λ-terms → black-white trees. Each constructor adds one node at the
/// leftmost position (end of the left spine): S and 0 add black nodes, λ adds
/// a white node, and M₁M₂ adds a white node carrying the tree of M₁ as its
/// right child below the tree of M₂.
BwTree lambda_to_bw(const Term& t);

/// Inverse of lambda_to_bw; reads the term back off the left spine.
/// Throws MalformedInput if `b` is not a black-rooted tree of the grammar.
Term bw_to_lambda(const BwTree& b);

/// Black-white → zigzag-free. A black node whose left child is white is
/// dropped and a white node with no left child gains a leaf, so the node
/// count is preserved.
BzTree bw_to_bz(const BwTree& b);

/// Inverse of bw_to_bz. Throws MalformedInput on a zigzag.
BwTree bz_to_bw(const BzTree& z);

/// λ-terms → zigzag-free trees, built around the designated node (follow the
/// right-only chain from the root, then left children to a leaf):
///   0 ↦ *,  S n ↦ right leaf under it,  λM ↦ left leaf under it,
///   M₁M₂ ↦ left leaf plus the tree of M₁ as right child.
BzTree lambda_to_bz(const Term& t);

/// Inverse of lambda_to_bz. Throws MalformedInput on a zigzag.
Term bz_to_lambda(const BzTree& z);

/// Motzkin trees → neutral normal forms:
///   k unary nodes over a leaf ↦ index k,
///   k unary nodes over N(t₁, t₂) ↦ (t₁' λ^k t₂').
Term motzkin_to_neutral(const MotzkinTree& m);

/// Inverse of motzkin_to_neutral. Throws NotNeutral.
MotzkinTree neutral_to_motzkin(const Term& t);

/// Size-lowering bijection from neutral head normal forms of size n+1 to
/// plain terms of size n:
///   0 N₁…N_p ↦ (λN₁) N₂…N_p,   (S n) N₁…N_p ↦ n N₁…N_p.
/// Throws NoImage for the bare index 0, MalformedInput for a non-neutral-hnf.
Term khnf_shift(const Term& p);

/// Inverse of khnf_shift; defined on every plain term.
Term khnf_unshift(const Term& q);

}  // namespace lamcount
