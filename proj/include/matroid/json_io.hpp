#pragma once

#include <string>

#include "matroid/iso.hpp"
#include "matroid/matroid.hpp"
#include "matroid/treedecomp.hpp"
#include "matroid/verify.hpp"

namespace matroid {

// {"ground":[...],"bases":[[...]]} or, with by_circuits,
// {"ground":[...],"circuits":[[...]]}. Compact, fixed key order, byte-stable.
std::string matroid_to_json(const Matroid& m, bool by_circuits = false);

// Accepts {"ground","bases"}, {"ground","circuits"} or {"graph"} documents.
// Exactly one defining key; "graph" documents carry their labels in the edge
// triples and must not also list a ground set. Throws ParseError on malformed
// input and the usual axiom errors on invalid families.
Matroid matroid_from_json(const std::string& text);

// {"contract":[...],"delete":[...],"map":{...}} with the map sending kept
// elements of m to the elements of n they become.
std::string witness_to_json(const Matroid& m, const Matroid& n,
                            const MinorWitness& w);

std::string tree_to_json(const DecompTree& t);

std::string report_to_json(const VerificationReport& r, bool with_wall_time);

}  // namespace matroid
