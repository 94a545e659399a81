#include "aetilde/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace aet {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ',' || c == ':' || c == '<' || c == '>' ||
        std::isspace(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

QuiverSpec parse_quiver(const std::string& text) {
  std::vector<std::string> tokens = split(text, ',');
  const std::string& word = tokens.front();
  if (word.size() < 2) {
    throw MalformedWord("orientation word needs at least two edges, got \"" + word + "\"");
  }
  QuiverSpec q;
  q.h = static_cast<int>(word.size());
  q.edges.reserve(word.size());
  for (char c : word) {
    if (c == '>') {
      q.edges.push_back(Dir::Forward);
    } else if (c == '<') {
      q.edges.push_back(Dir::Backward);
    } else {
      throw MalformedWord(std::string("unexpected character '") + c +
                          "' in orientation word \"" + word + "\"");
    }
  }
  const bool has_fwd = std::count(q.edges.begin(), q.edges.end(), Dir::Forward) > 0;
  const bool has_bwd = std::count(q.edges.begin(), q.edges.end(), Dir::Backward) > 0;
  if (!has_fwd || !has_bwd) {
    throw OrientedCycle("orientation \"" + word + "\" is a directed cycle; " +
                        "at least one arrow in each direction is required");
  }
  if (tokens.size() == 1) {
    for (int i = 0; i < q.h; ++i) q.labels.push_back("v" + std::to_string(i));
  } else {
    if (static_cast<int>(tokens.size()) - 1 != q.h) {
      throw LabelCountMismatch("expected " + std::to_string(q.h) + " labels, got " +
                               std::to_string(tokens.size() - 1));
    }
    std::set<std::string> seen;
    for (int i = 1; i < static_cast<int>(tokens.size()); ++i) {
      if (!valid_label(tokens[i])) {
        throw MalformedWord("invalid vertex label \"" + tokens[i] + "\"");
      }
      if (!seen.insert(tokens[i]).second) {
        throw DuplicateLabel("vertex label \"" + tokens[i] + "\" repeats");
      }
      q.labels.push_back(tokens[i]);
    }
  }
  return q;
}

std::string quiver_word(const QuiverSpec& q) {
  std::string out;
  out.reserve(q.edges.size());
  for (Dir d : q.edges) out += (d == Dir::Forward ? '>' : '<');
  return out;
}

int vertex_index(const QuiverSpec& q, const std::string& label) {
  for (int i = 0; i < q.h; ++i) {
    if (q.labels[i] == label) return i;
  }
  throw UnknownLabel("no vertex labelled \"" + label + "\" in quiver " + quiver_word(q));
}

QuiverSpec opposite_quiver(const QuiverSpec& q) {
  QuiverSpec out = q;
  for (Dir& d : out.edges) d = flip(d);
  return out;
}

QuiverSpec mirror_quiver(const QuiverSpec& q) {
  // Position p of the mirror is position -p of the original, so the arrow
  // between p and p+1 is the reversed arrow between -p-1 and -p.
  QuiverSpec out;
  out.h = q.h;
  out.edges.resize(q.h);
  out.labels.resize(q.h);
  for (int i = 0; i < q.h; ++i) {
    out.edges[i] = flip(q.edges[mod_h(-i - 1, q.h)]);
    out.labels[i] = q.labels[mod_h(-i, q.h)];
  }
  return out;
}

namespace {

// Hook lengths over one full period of the cover, walking left (towards
// smaller positions) or right from a cover sink.
Measure raw_hooks(const QuiverSpec& q, long long sink, bool leftwards) {
  Measure out;
  long long covered = 0;
  long long cur = sink;
  while (covered < q.h) {
    int len = 1;
    if (leftwards) {
      long long p = cur - 1;
      while (cover_arrow(q, p - 1) == Dir::Backward) {
        --p;
        ++len;
      }
      cur = p;
    } else {
      long long p = cur + 1;
      while (cover_arrow(q, p) == Dir::Forward) {
        ++p;
        ++len;
      }
      cur = p;
    }
    out.push_back(len);
    covered += len;
  }
  return out;
}

}  // namespace

HookSystem hook_system(const QuiverSpec& q) {
  long long sink = -1;
  for (int p = 0; p < q.h; ++p) {
    if (is_cover_sink(q, p)) {
      sink = p;
      break;
    }
  }
  // An acyclic orientation of the cycle always has a sink.
  Measure left = minimal_rotation(raw_hooks(q, sink, true)).rotated;
  Measure right = minimal_rotation(raw_hooks(q, sink, false)).rotated;
  HookSystem hs;
  hs.reflected = cmp_measure(right, left) == Ord::Less;
  if (hs.reflected) std::swap(left, right);
  hs.L = std::move(left);
  hs.R = std::move(right);
  hs.s = static_cast<int>(hs.L.size());
  hs.t = static_cast<int>(hs.R.size());
  hs.takeoff = (hs.L == hs.R) ? Takeoff::Symmetric : Takeoff::Right;
  return hs;
}

QuiverSpec random_quiver(std::mt19937& rng, int h_min, int h_max) {
  std::uniform_int_distribution<int> hdist(std::max(2, h_min), std::max(2, h_max));
  const int h = hdist(rng);
  std::uniform_int_distribution<int> bit(0, 1);
  std::string word;
  do {
    word.clear();
    for (int i = 0; i < h; ++i) word += (bit(rng) ? '>' : '<');
  } while (word.find('>') == std::string::npos || word.find('<') == std::string::npos);
  return parse_quiver(word);
}

}  // namespace aet
