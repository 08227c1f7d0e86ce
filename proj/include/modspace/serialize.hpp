// File formats: the MSK1 binary signal container, its JSON sidecar for small
// signals, weight and step-symbol descriptors, and the CSV writers shared by
// the CLI and the experiment harness.
//
// MSK1 layout (little-endian throughout):
//   bytes  0..3   magic "MSK1"
//   bytes  4..27  six uint32 fields: d, L, n, flags, j_count, k_count
//   bytes 28..31  reserved (zero)
// flags 0: grid signal; payload is total() interleaved (re, im) doubles.
// flags 1: Gabor coefficient table; payload is one double (tail ratio)
//          followed by j_count * k_count interleaved (re, im) doubles in the
//          row-major order produced by analyze().  Lattice coordinates are
//          regenerated from the grid, not stored.

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "modspace/gabor.hpp"
#include "modspace/grid.hpp"
#include "modspace/multipliers.hpp"
#include "modspace/seqspace.hpp"
#include "modspace/weights.hpp"

namespace modspace {

void write_signal(const std::string& path, const SampledSignal& f);
SampledSignal read_signal(const std::string& path);

void write_signal_json(const std::string& path, const SampledSignal& f);
SampledSignal read_signal_json(const std::string& path);

void write_gabor(const std::string& path, const GaborCoefficients& c);
GaborCoefficients read_gabor(const std::string& path);

// rows "j,k,re,im" (multi-indices space-separated inside the field)
void write_gabor_csv(const std::string& path, const GaborCoefficients& c);

// {"kind": "constant"|"polynomial"|"subexp"|"split", ...}; split carries
// "position" and "frequency" sub-descriptors (each a non-split weight part).
Weight weight_from_json(const nlohmann::json& j);
nlohmann::json weight_to_json(const Weight& w);
Weight read_weight(const std::string& path);

// {"b": width or [widths], "kind": optional named generator, "cells":
//  [{"j": cell or [cells], "value": [re, im] or re}, ...]}
// Named generators: "constant" (value), "hilbert", "alternating",
// "unimodular" (seed), "linf" (seed, sup); default is the cell table.
StepSymbol step_symbol_from_json(const nlohmann::json& j);
StepSymbol read_step_symbol(const std::string& path);

// coordinate-list CSV "row_pos,row_freq,col_pos,col_freq,re,im" with
// multi-index fields space-separated, frequencies in lattice units of pi
void write_matrix_csv(const std::string& path, const OperatorGaborMatrix& A);

// one CSV row per inequality trial: trial id, exponent tuple, lhs, rhs,
// ratio, holds
std::string inequality_csv_row(long trial, const std::vector<Exponent>& exps,
                               const InequalityReport& rep);

std::string fmt_exponent(const Exponent& e);

}  // namespace modspace
