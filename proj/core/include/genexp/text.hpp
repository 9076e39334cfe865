#ifndef GENEXP_TEXT_HPP
#define GENEXP_TEXT_HPP

// Canonical text forms used by the command line tool and the test suite:
// partitions as comma separated parts ("-" when empty), tableaux as slash
// separated rows, skew tableaux as "outer|inner|rows", and monomial keys
// matching the polynomial printer.  Parsers are strict and throw
// std::invalid_argument on malformed input.

#include <string>

#include "genexp/partition.hpp"
#include "genexp/polynomial.hpp"
#include "genexp/skew.hpp"
#include "genexp/tableau.hpp"

namespace genexp {

std::string format_partition(const Partition& p);
Partition parse_partition(const std::string& text);

std::string format_tableau(const Tableau& t);
Tableau parse_tableau(const std::string& text, int alphabet);

// Renders entries over the doubled alphabet: 2k-1 as "k", 2k as "k'".
std::string format_tableau_barred(const Tableau& t);

std::string format_skew(const SkewTableau& t);
SkewTableau parse_skew(const std::string& text, int alphabet);

// "1" for the empty monomial, otherwise "t", "t^2", "t_2*t_4^2", ...
std::string format_monomial(const Monomial& m);
Monomial parse_monomial(const std::string& text);

}  // namespace genexp

#endif
