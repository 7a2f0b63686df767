#pragma once

#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "knotmod/common.hpp"

namespace knotmod {

/// One crossing of a PD code: arc labels counterclockwise starting from the
/// incoming under-strand, so the under-strand runs a -> c and the over-strand
/// occupies b and d.
struct Crossing {
  int a, b, c, d;
  bool operator==(const Crossing&) const = default;
};

/// A validated PD-coded knot diagram. An empty crossing list encodes the
/// zero-crossing unknot. Labels are 1..2l along the knot's orientation, each
/// appearing exactly twice, with every passage through a crossing stepping
/// the label by one (mod 2l).
class Diagram {
 public:
  Diagram() = default;

  /// Validates and computes per-crossing signs. Throws InputError on any
  /// malformed input.
  static Diagram from_crossings(std::vector<Crossing> cs) {
    Diagram d;
    d.crossings_ = std::move(cs);
    d.validate_and_sign();
    return d;
  }

  std::size_t crossing_count() const { return crossings_.size(); }
  std::size_t arc_count() const { return 2 * crossings_.size(); }
  const std::vector<Crossing>& crossings() const { return crossings_; }

  /// Sign of crossing i (0-based): +1 when the outgoing over-strand label
  /// succeeds the incoming one, -1 the other way.
  int sign(std::size_t i) const {
    if (i >= signs_.size()) throw InputError("crossing index out of range");
    return signs_[i];
  }
  const std::vector<int>& signs() const { return signs_; }

  long writhe() const { return writhe_; }

  bool operator==(const Diagram& o) const {
    return crossings_ == o.crossings_;
  }
  bool operator!=(const Diagram& o) const { return !(*this == o); }

 private:
  void validate_and_sign();

  std::vector<Crossing> crossings_;
  std::vector<int> signs_;
  long writhe_ = 0;
};

namespace detail {

inline int succ(int x, int n_arcs) { return x % n_arcs + 1; }

// Position of one occurrence of a label inside a diagram.
struct Slot {
  std::size_t crossing;
  int slot;  // 0 = a, 1 = b, 2 = c, 3 = d
};

// Where a label enters the diagram (incoming) and leaves it (outgoing).
struct LabelUse {
  Slot in, out;
};

inline int& slot_ref(Crossing& c, int s) {
  switch (s) {
    case 0: return c.a;
    case 1: return c.b;
    case 2: return c.c;
    default: return c.d;
  }
}

inline int slot_val(const Crossing& c, int s) {
  switch (s) {
    case 0: return c.a;
    case 1: return c.b;
    case 2: return c.c;
    default: return c.d;
  }
}

// incoming/outgoing occurrence of every label; assumes a validated diagram.
inline std::vector<LabelUse> label_uses(const Diagram& d) {
  std::vector<LabelUse> uses(d.arc_count() + 1);
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const Crossing& c = d.crossings()[i];
    const int s = d.sign(i);
    uses[static_cast<std::size_t>(c.a)].in = {i, 0};
    uses[static_cast<std::size_t>(c.c)].out = {i, 2};
    if (s > 0) {
      uses[static_cast<std::size_t>(c.b)].in = {i, 1};
      uses[static_cast<std::size_t>(c.d)].out = {i, 3};
    } else {
      uses[static_cast<std::size_t>(c.d)].in = {i, 3};
      uses[static_cast<std::size_t>(c.b)].out = {i, 1};
    }
  }
  return uses;
}

}  // namespace detail

inline void Diagram::validate_and_sign() {
  const std::size_t l = crossings_.size();
  signs_.clear();
  writhe_ = 0;
  if (l == 0) return;

  const int n_arcs = static_cast<int>(2 * l);
  std::vector<int> count(static_cast<std::size_t>(n_arcs) + 1, 0);
  for (const Crossing& c : crossings_) {
    for (int v : {c.a, c.b, c.c, c.d}) {
      if (v < 1 || v > n_arcs) {
        std::ostringstream os;
        os << "invalid PD code: label " << v << " outside 1.." << n_arcs;
        throw InputError(os.str());
      }
      ++count[static_cast<std::size_t>(v)];
    }
  }
  for (int v = 1; v <= n_arcs; ++v) {
    if (count[static_cast<std::size_t>(v)] != 2) {
      std::ostringstream os;
      os << "invalid PD code: label " << v << " appears "
         << count[static_cast<std::size_t>(v)] << " times (want 2)";
      throw InputError(os.str());
    }
  }

  signs_.reserve(l);
  std::vector<int> in_seen(static_cast<std::size_t>(n_arcs) + 1, 0);
  std::vector<int> out_seen(static_cast<std::size_t>(n_arcs) + 1, 0);
  for (std::size_t i = 0; i < l; ++i) {
    const Crossing& c = crossings_[i];
    if (c.c != detail::succ(c.a, n_arcs)) {
      std::ostringstream os;
      os << "invalid PD code: crossing " << i
         << " under-strand does not step " << c.a << " -> " << c.c;
      throw InputError(os.str());
    }
    int s;
    if (l == 1) {
      // With two arcs the successor relation cannot separate the two over
      // slots; the kink curls positively exactly when b == c.
      s = (c.b == c.c) ? 1 : -1;
    } else if (c.d == detail::succ(c.b, n_arcs)) {
      s = 1;
    } else if (c.b == detail::succ(c.d, n_arcs)) {
      s = -1;
    } else {
      std::ostringstream os;
      os << "invalid PD code: crossing " << i
         << " over-strand labels are not consecutive";
      throw InputError(os.str());
    }
    signs_.push_back(s);
    writhe_ += s;
    const int over_in = s > 0 ? c.b : c.d;
    const int over_out = s > 0 ? c.d : c.b;
    if (++in_seen[static_cast<std::size_t>(c.a)] > 1 ||
        ++in_seen[static_cast<std::size_t>(over_in)] > 1 ||
        ++out_seen[static_cast<std::size_t>(c.c)] > 1 ||
        ++out_seen[static_cast<std::size_t>(over_out)] > 1) {
      std::ostringstream os;
      os << "invalid PD code: crossing " << i
         << " breaks the single closed walk";
      throw InputError(os.str());
    }
  }
}

/// Parses the PD grammar: `pd := crossing (";" crossing)* | ""` with
/// `crossing := "X[" int "," int "," int "," int "]"`, no interior
/// whitespace; surrounding whitespace is ignored. Reports byte offsets in
/// syntax errors.
inline Diagram parse_pd(const std::string& text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  if (begin == end) return Diagram();

  std::vector<Crossing> cs;
  std::size_t pos = begin;
  auto fail = [&](const std::string& expected) -> void {
    std::ostringstream os;
    os << "invalid PD code: syntax error at offset " << pos << " (expected "
       << expected << ")";
    throw InputError(os.str());
  };
  auto literal = [&](char ch, const char* what) {
    if (pos >= end || text[pos] != ch) fail(what);
    ++pos;
  };
  auto integer = [&]() -> int {
    if (pos >= end || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("digit");
    long v = 0;
    while (pos < end && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) fail("label small enough to be an arc");
      ++pos;
    }
    return static_cast<int>(v);
  };

  while (true) {
    literal('X', "'X'");
    literal('[', "'['");
    Crossing c{};
    c.a = integer();
    literal(',', "','");
    c.b = integer();
    literal(',', "','");
    c.c = integer();
    literal(',', "','");
    c.d = integer();
    literal(']', "']'");
    cs.push_back(c);
    if (pos == end) break;
    literal(';', "';' or end of input");
  }
  return Diagram::from_crossings(std::move(cs));
}

/// Inverse of parse_pd; the unknot renders as the empty string.
inline std::string render(const Diagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const Crossing& c : d.crossings()) {
    if (!first) os << ';';
    first = false;
    os << "X[" << c.a << ',' << c.b << ',' << c.c << ',' << c.d << ']';
  }
  return os.str();
}

/// Connected sum: cuts arc 1 of each diagram and splices the two open
/// strands into one knot, relabeling 1..2(l1+l2) along the new orientation.
inline Diagram connected_sum(const Diagram& d1, const Diagram& d2) {
  if (d2.crossing_count() == 0) return d1;
  if (d1.crossing_count() == 0) return d2;

  const int n2 = static_cast<int>(d2.arc_count());
  const auto uses1 = detail::label_uses(d1);
  const auto uses2 = detail::label_uses(d2);

  // New labels: the X1 -> Y2 splice is arc 1; D2's arcs 2..2l2 keep their
  // values; the X2 -> Y1 splice is 2l2+1; D1's arcs j >= 2 become 2l2+j.
  std::vector<Crossing> out;
  out.reserve(d1.crossing_count() + d2.crossing_count());
  for (const Crossing& c : d1.crossings()) out.push_back(c);
  const std::size_t off1 = 0;  // d1's crossings sit first in `out`
  for (const Crossing& c : d2.crossings()) out.push_back(c);
  const std::size_t off2 = d1.crossing_count();

  auto apply = [&](std::size_t base, const Diagram& src, auto&& relabel) {
    for (std::size_t i = 0; i < src.crossing_count(); ++i)
      for (int s = 0; s < 4; ++s) {
        int& v = detail::slot_ref(out[base + i], s);
        v = relabel(v, i, s);
      }
  };

  const detail::Slot in1 = uses1[1].in;
  const detail::Slot in2 = uses2[1].in;
  apply(off1, d1, [&](int v, std::size_t i, int s) {
    if (v == 1) {
      if (in1.crossing == i && in1.slot == s) return n2 + 1;  // splice in
      return 1;                                               // splice out
    }
    return v + n2;
  });
  apply(off2, d2, [&](int v, std::size_t i, int s) {
    if (v == 1) {
      if (in2.crossing == i && in2.slot == s) return 1;  // D1 enters here
      return n2 + 1;                                     // returns to D1
    }
    return v;
  });
  return Diagram::from_crossings(std::move(out));
}

/// Mirror image: every crossing switches which strand passes over. Each
/// tuple rotates so the old over-strand becomes the new under-strand; arc
/// labels and orientation are untouched, so all signs flip.
inline Diagram mirror(const Diagram& d) {
  std::vector<Crossing> out;
  out.reserve(d.crossing_count());
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const Crossing& c = d.crossings()[i];
    if (d.sign(i) > 0)
      out.push_back({c.b, c.c, c.d, c.a});
    else
      out.push_back({c.d, c.a, c.b, c.c});
  }
  return Diagram::from_crossings(std::move(out));
}

/// m-fold connected-sum power; m >= 1.
inline Diagram repeat_sum(const Diagram& d, long m) {
  if (m < 1) throw InputError("repeat count must be at least 1");
  Diagram acc = d;
  for (long i = 1; i < m; ++i) acc = connected_sum(acc, d);
  return acc;
}

/// Adds one curl of the given sign on arc 1 (Reidemeister I move).
inline Diagram add_kink(const Diagram& d, int kink_sign) {
  if (kink_sign != 1 && kink_sign != -1)
    throw InputError("kink sign must be +1 or -1");

  const int n_new = static_cast<int>(d.arc_count()) + 2;
  auto wrap = [n_new](int x) { return (x - 1) % n_new + 1; };

  std::vector<Crossing> out;
  out.reserve(d.crossing_count() + 1);
  if (d.crossing_count() > 0) {
    const auto uses = detail::label_uses(d);
    const detail::Slot in1 = uses[1].in;
    for (std::size_t i = 0; i < d.crossing_count(); ++i) {
      Crossing c = d.crossings()[i];
      for (int s = 0; s < 4; ++s) {
        int& v = detail::slot_ref(c, s);
        if (v == 1)
          v = (in1.crossing == i && in1.slot == s) ? 3 : 1;
        else
          v += 2;
      }
      out.push_back(c);
    }
  }
  // The curl occupies arcs 1 (entering under), 2 (the loop) and 3 (leaving).
  if (kink_sign > 0)
    out.push_back({1, 2, 2, wrap(3)});
  else
    out.push_back({1, wrap(3), 2, 2});
  return Diagram::from_crossings(std::move(out));
}

}  // namespace knotmod
