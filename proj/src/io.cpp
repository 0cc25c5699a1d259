#include "braidcover/io.hpp"

#include <fstream>
#include <sstream>

namespace braidcover {

namespace {

std::string next_line(std::istream& in, const std::string& what) {
  std::string line;
  while (std::getline(in, line)) {
    // strip comments and blank lines
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) return line;
  }
  throw parse_error("unexpected end of file while reading " + what);
}

}  // namespace

HurwitzSystem read_hurwitz(std::istream& in) {
  HurwitzSystem h;
  int n = 0;
  {
    std::istringstream ls(next_line(in, "header line 'm n'"));
    if (!(ls >> h.m >> n) || h.m < 1 || n < 1)
      throw parse_error("bad header: want 'm n' with m,n >= 1");
  }
  for (int i = 0; i < n; ++i) {
    std::istringstream ls(next_line(in, "transposition line " + std::to_string(i + 1)));
    int x, y;
    if (!(ls >> x >> y)) throw parse_error("bad transposition on line " + std::to_string(i + 2));
    if (x < 1 || y < 1 || x >= y || y > h.m)
      throw parse_error("transposition " + std::to_string(x) + " " + std::to_string(y) +
                        " out of range (want 1 <= x < y <= m)");
    h.tuple.emplace_back(x, y);
  }
  return h;
}

void write_hurwitz(std::ostream& out, const HurwitzSystem& h) {
  out << h.m << " " << h.n() << "\n";
  for (const auto& t : h.tuple) out << t.x << " " << t.y << "\n";
}

std::string hurwitz_line(const HurwitzSystem& h) {
  std::string s = std::to_string(h.m) + " " + std::to_string(h.n());
  for (const auto& t : h.tuple) s += "  " + std::to_string(t.x) + " " + std::to_string(t.y);
  return s;
}

DissectionSkeleton read_skeleton(std::istream& in) {
  DissectionSkeleton skel;
  int b = 0, m = 0, n = 0;
  {
    std::istringstream ls(next_line(in, "header 'g b m n'"));
    if (!(ls >> skel.genus >> b >> m >> n)) throw parse_error("bad skeleton header");
  }
  for (int c = 0; c < b; ++c) {
    std::istringstream ls(next_line(in, "boundary component " + std::to_string(c + 1)));
    std::vector<int> cyc;
    int p;
    while (ls >> p) cyc.push_back(p);
    if (cyc.empty()) throw parse_error("empty boundary component line");
    skel.bcycles.push_back(std::move(cyc));
  }
  skel.fans.assign(m, {});
  for (int v = 0; v < m; ++v) {
    std::istringstream ls(next_line(in, "fan of point " + std::to_string(v + 1)));
    std::string tok;
    std::vector<ArcEndRef> ccw;
    while (ls >> tok) {
      if (tok == "-") break;  // empty fan marker
      auto dot = tok.find('.');
      if (dot == std::string::npos) throw parse_error("bad fan entry '" + tok + "' (want arc.end)");
      ArcEndRef ref;
      ref.arc = std::stoi(tok.substr(0, dot)) - 1;
      ref.end = std::stoi(tok.substr(dot + 1));
      ccw.push_back(ref);
    }
    // files are ccw; storage is rotation order
    skel.fans[v].assign(ccw.rbegin(), ccw.rend());
  }
  skel.arc_ends.assign(n, {0, 0});
  for (int a = 0; a < n; ++a) {
    std::istringstream ls(next_line(in, "arc line " + std::to_string(a + 1)));
    int idx, e0, e1;
    if (!(ls >> idx >> e0 >> e1) || idx != a + 1)
      throw parse_error("bad arc line " + std::to_string(a + 1));
    skel.arc_ends[a] = {e0, e1};
  }
  return skel;
}

void write_skeleton(std::ostream& out, const DissectionSkeleton& skel) {
  out << skel.genus << " " << skel.bcycles.size() << " " << skel.m_points() << " " << skel.n_arcs()
      << "\n";
  for (const auto& cyc : skel.bcycles) {
    for (size_t i = 0; i < cyc.size(); ++i) out << (i ? " " : "") << cyc[i];
    out << "\n";
  }
  for (const auto& fan : skel.fans) {
    if (fan.empty()) {
      out << "-\n";
      continue;
    }
    for (auto it = fan.rbegin(); it != fan.rend(); ++it)
      out << (it == fan.rbegin() ? "" : " ") << (it->arc + 1) << "." << it->end;
    out << "\n";
  }
  for (int a = 0; a < skel.n_arcs(); ++a)
    out << (a + 1) << " " << skel.arc_ends[a][0] << " " << skel.arc_ends[a][1] << "\n";
}

namespace {

Corner parse_corner(const Chart& chart, const std::string& tok) {
  // "(p,c)" with c counted ccw
  if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')')
    throw parse_error("bad corner '" + tok + "'");
  auto comma = tok.find(',');
  if (comma == std::string::npos) throw parse_error("bad corner '" + tok + "'");
  const int p = std::stoi(tok.substr(1, comma - 1)) - 1;
  const int c_ccw = std::stoi(tok.substr(comma + 1, tok.size() - comma - 2));
  if (p < 0 || p >= chart.m_points()) throw parse_error("corner point out of range in '" + tok + "'");
  const int K = chart.corner_count(p) - 1;
  if (c_ccw < 0 || c_ccw > K) throw parse_error("corner index out of range in '" + tok + "'");
  return Corner{p, K - c_ccw};
}

std::string corner_str(const Chart& chart, Corner c) {
  const int K = chart.corner_count(c.point) - 1;
  return "(" + std::to_string(c.point + 1) + "," + std::to_string(K - c.idx) + ")";
}

}  // namespace

Dissection read_dissection(std::istream& in) {
  int g = 0, b = 0;
  {
    std::istringstream ls(next_line(in, "'surface g b'"));
    std::string kw;
    if (!(ls >> kw >> g >> b) || kw != "surface") throw parse_error("want 'surface <g> <b>'");
  }
  MarkedSurface s;
  s.genus = g;
  {
    std::istringstream ls(next_line(in, "'marks ...'"));
    std::string kw;
    if (!(ls >> kw) || kw != "marks") throw parse_error("want 'marks k_1 ... k_b'");
    int k;
    while (ls >> k) s.boundary_marks.push_back(k);
    if (static_cast<int>(s.boundary_marks.size()) != b) throw parse_error("marks count != b");
  }
  int n = 0;
  {
    std::istringstream ls(next_line(in, "'arcs n'"));
    std::string kw;
    if (!(ls >> kw >> n) || kw != "arcs") throw parse_error("want 'arcs <n>'");
  }
  Dissection d;
  d.chart = std::make_shared<const Chart>(Chart::standard(s));
  for (int a = 0; a < n; ++a) {
    std::istringstream ls(next_line(in, "arc " + std::to_string(a + 1)));
    std::string tok;
    CrossingWord w;
    bool have_start = false, have_end = false;
    while (ls >> tok) {
      if (tok.rfind("start=", 0) == 0) {
        w.start = parse_corner(*d.chart, tok.substr(6));
        have_start = true;
      } else if (tok.rfind("end=", 0) == 0) {
        w.end = parse_corner(*d.chart, tok.substr(4));
        have_end = true;
      } else if (tok.rfind("letters=[", 0) == 0) {
        std::string body = tok.substr(9);
        if (body.empty() || body.back() != ']') throw parse_error("bad letters in arc line");
        body.pop_back();
        size_t pos = 0;
        while (pos < body.size()) {
          if (body[pos] != '(') throw parse_error("bad letter list");
          auto close = body.find(')', pos);
          auto comma = body.find(',', pos);
          if (close == std::string::npos || comma == std::string::npos || comma > close)
            throw parse_error("bad letter list");
          const int r = std::stoi(body.substr(pos + 1, comma - pos - 1)) - 1;
          const int side = std::stoi(body.substr(comma + 1, close - comma - 1));
          if (r < 0 || r >= d.chart->n_arcs() || (side != 0 && side != 1))
            throw parse_error("letter out of range");
          w.letters.push_back(2 * r + side);
          pos = close + 1;
          if (pos < body.size() && body[pos] == ',') ++pos;
        }
      } else {
        throw parse_error("unexpected token '" + tok + "' in arc line");
      }
    }
    if (!have_start || !have_end) throw parse_error("arc line missing start/end corner");
    d.arcs.push_back(ArcClass::make(*d.chart, w));
  }
  return d;
}

void write_dissection(std::ostream& out, const Dissection& d) {
  const auto& s = d.chart->skeleton().surface();
  out << "surface " << s.genus << " " << s.b() << "\n";
  out << "marks";
  for (int k : s.boundary_marks) out << " " << k;
  out << "\n";
  out << "arcs " << d.n() << "\n";
  for (const auto& a : d.arcs) {
    const auto& w = a.word();
    out << "start=" << corner_str(*d.chart, w.start) << " letters=[";
    for (size_t i = 0; i < w.letters.size(); ++i) {
      if (i) out << ",";
      out << "(" << (w.letters[i] / 2 + 1) << "," << (w.letters[i] & 1) << ")";
    }
    out << "] end=" << corner_str(*d.chart, w.end) << "\n";
  }
}

GradingData read_grading(std::istream& in) {
  GradingData g;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int point, pos, deg;
    if (ls >> point >> pos >> deg) g.degrees[{point - 1, pos}] = deg;
  }
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HurwitzSystem read_hurwitz_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return read_hurwitz(in);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

Dissection read_dissection_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return read_dissection(in);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

DissectionSkeleton read_skeleton_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return read_skeleton(in);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

}  // namespace braidcover
