#ifndef ZSF_ZSG_IO_HPP
#define ZSF_ZSG_IO_HPP

// ZSG text format, bit-exact:
//   line 1: "zsg 1"
//   line 2: decimal n
//   then n-1 lines; line k (1-based) holds n-k characters from {+,-},
//   the labels of edges {k-1, j} for j = k..n-1.
// Every line ends with '\n'; no trailing whitespace.

#include <iosfwd>
#include <string>

#include "zsf/edge_labeling.hpp"

namespace zsf {

void write_zsg(const EdgeLabeling& labeling, std::ostream& out);
std::string to_zsg(const EdgeLabeling& labeling);

EdgeLabeling read_zsg(std::istream& in);
EdgeLabeling parse_zsg(const std::string& text);

EdgeLabeling read_zsg_file(const std::string& path);
void write_zsg_file(const EdgeLabeling& labeling, const std::string& path);

} // namespace zsf

#endif
