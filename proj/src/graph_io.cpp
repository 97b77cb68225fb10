// Copyright 2026 The tutteseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <sstream>

#include "tutteseq/errors.hpp"
#include "tutteseq/multigraph.hpp"

namespace tutteseq {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (body.empty()) continue;
    std::istringstream fields(body);
    if (n < 0) {
      std::string extra;
      if (!(fields >> n) || (fields >> extra) || n < 1)
        throw ParseError("line " + std::to_string(line_no) + ": expected a positive vertex count");
      continue;
    }
    int u = 0, v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra))
      throw ParseError("line " + std::to_string(line_no) + ": expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("line " + std::to_string(line_no) + ": vertex index out of range");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw ParseError("missing vertex count");
  return Multigraph(n, std::move(edges));
}

Multigraph read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const Multigraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) os << e.u << " " << e.v << "\n";
  return os.str();
}

}  // namespace tutteseq
