// Copyright 2026 The Spinform Authors
// SPDX-License-Identifier: Apache-2.0
//
// Structured text format for spinors: a header line "m <half-dimension>"
// followed by "<subset-bitmask> <re> <im>" triples, one per nonzero
// coefficient. '#' starts a comment.

#pragma once

#include "spinform/spinor.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace spinform {

inline void write_spinor(std::ostream& os, const Spinor& s) {
  os << "m " << s.half_dim() << "\n";
  for (Mask sub = 0; sub < Mask(s.size()); ++sub) {
    const Complex z = s.coeff(sub);
    if (z == 0.0) continue;
    os.precision(17);
    os << sub << " " << z.real() << " " << z.imag() << "\n";
  }
}

inline Spinor read_spinor(std::istream& is) {
  std::string line;
  int m = -1;
  Spinor s;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "m") {
      if (m != -1) throw std::runtime_error("spinor file: duplicate header");
      if (!(ls >> m) || m < 1) throw std::runtime_error("spinor file: bad half-dimension");
      s = Spinor(m);
      continue;
    }
    if (m == -1) throw std::runtime_error("spinor file: missing 'm' header");
    Mask sub = 0;
    double re = 0, im = 0;
    try {
      sub = Mask(std::stoul(first));
    } catch (...) {
      throw std::runtime_error("spinor file: bad mask at line " + std::to_string(lineno));
    }
    if (!(ls >> re >> im))
      throw std::runtime_error("spinor file: bad coefficient at line " + std::to_string(lineno));
    if (sub >= Mask(s.size()))
      throw std::runtime_error("spinor file: mask out of range at line " + std::to_string(lineno));
    s.coeff(sub) += Complex(re, im);
  }
  if (m == -1) throw std::runtime_error("spinor file: missing 'm' header");
  return s;
}

}  // namespace spinform
