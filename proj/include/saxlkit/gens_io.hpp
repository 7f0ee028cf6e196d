#pragma once

#include <string>
#include <vector>

#include "saxlkit/perm.hpp"

namespace saxl {

/// Generator file format (".gens"):
///   line 1: degree n
///   each following nonempty line: one permutation, either as n
///   space-separated images (0-indexed) or in cycle notation "(a b c)(d e)".
///   Lines starting with '#' are ignored.
struct GensFile {
    int degree = 0;
    std::vector<Perm> gens;
};

GensFile parse_gens(std::istream& in);
GensFile load_gens_file(const std::string& path);
void write_gens_file(const std::string& path, int degree, const std::vector<Perm>& gens,
                     const std::string& comment = "");

// One permutation from a single line (images or cycle notation).
Perm parse_perm_line(const std::string& line, int degree);

/// Matrix file: whitespace-separated field-element indices, n*n entries per
/// matrix, any number of matrices. '#' starts a comment line.
std::vector<std::vector<std::vector<int>>> load_matrix_file(const std::string& path, int n);

}  // namespace saxl
