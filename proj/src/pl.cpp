#include "solvline/pl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace solvline {

AffineMap::AffineMap(Rat slope_, Rat offset_) : slope(std::move(slope_)), offset(std::move(offset_)) {
  if (slope <= 0) throw std::invalid_argument("affine map must have positive slope");
}

AffineMap AffineMap::compose(const AffineMap& rhs) const {
  return AffineMap(slope * rhs.slope, slope * rhs.offset + offset);
}

AffineMap AffineMap::inverse() const { return AffineMap(1 / slope, -offset / slope); }

std::string AffineMap::str() const {
  std::ostringstream os;
  if (slope != 1) os << rat_str(slope);
  os << "x";
  if (offset > 0) os << "+" << rat_str(offset);
  if (offset < 0) os << "-" << rat_str(-offset);
  return os.str();
}

AffineMap parse_affine(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto xpos = s.find_first_of("xX");
  if (xpos == std::string::npos) throw std::invalid_argument("affine map must contain 'x'");
  Rat slope = 1;
  std::string head = s.substr(0, xpos);
  if (!head.empty()) {
    if (head == "-") slope = -1;
    else if (head != "+") slope = parse_rat(head);
  }
  Rat offset = 0;
  std::string rest = s.substr(xpos + 1);
  if (!rest.empty()) {
    if (rest[0] != '+' && rest[0] != '-')
      throw std::invalid_argument("expected '+' or '-' after 'x' in affine map");
    Rat mag = parse_rat(rest.substr(1));
    offset = rest[0] == '-' ? -mag : mag;
  }
  return AffineMap(slope, offset);
}

PLMap::PLMap() : xs_{0}, ys_{0}, lslope_(1), rslope_(1) {}

PLMap PLMap::affine(const AffineMap& m) {
  PLMap out;
  out.xs_ = {0};
  out.ys_ = {m.offset};
  out.lslope_ = m.slope;
  out.rslope_ = m.slope;
  return out;
}

PLMap PLMap::from_nodes(std::vector<std::pair<Rat, Rat>> nodes, Rat left_slope, Rat right_slope) {
  if (nodes.empty()) throw std::invalid_argument("PLMap needs at least one node");
  if (left_slope <= 0 || right_slope <= 0)
    throw std::invalid_argument("PLMap end slopes must be positive");
  PLMap out;
  out.xs_.clear();
  out.ys_.clear();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0 && (nodes[i].first <= nodes[i - 1].first || nodes[i].second <= nodes[i - 1].second))
      throw std::invalid_argument("PLMap nodes must be strictly increasing");
    out.xs_.push_back(nodes[i].first);
    out.ys_.push_back(nodes[i].second);
  }
  out.lslope_ = std::move(left_slope);
  out.rslope_ = std::move(right_slope);
  out.canonicalize();
  return out;
}

void PLMap::canonicalize() {
  std::vector<Rat> xs, ys;
  std::size_t n = xs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    Rat in_slope = i == 0 ? lslope_ : (ys_[i] - ys_[i - 1]) / (xs_[i] - xs_[i - 1]);
    Rat out_slope = i + 1 == n ? rslope_ : (ys_[i + 1] - ys_[i]) / (xs_[i + 1] - xs_[i]);
    if (in_slope != out_slope) {
      xs.push_back(xs_[i]);
      ys.push_back(ys_[i]);
    }
  }
  if (xs.empty()) {
    // globally affine: anchor at x = 0
    Rat y0 = ys_[0] + lslope_ * (Rat(0) - xs_[0]);
    xs.push_back(0);
    ys.push_back(y0);
  }
  xs_ = std::move(xs);
  ys_ = std::move(ys);
}

Rat PLMap::eval(const Rat& x) const {
  if (x <= xs_.front()) return ys_.front() + lslope_ * (x - xs_.front());
  if (x >= xs_.back()) return ys_.back() + rslope_ * (x - xs_.back());
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  std::size_t i = static_cast<std::size_t>(it - xs_.begin());
  const Rat& x0 = xs_[i - 1];
  const Rat& x1 = xs_[i];
  const Rat& y0 = ys_[i - 1];
  const Rat& y1 = ys_[i];
  return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

Rat PLMap::eval_inverse(const Rat& y) const {
  if (y <= ys_.front()) return xs_.front() + (y - ys_.front()) / lslope_;
  if (y >= ys_.back()) return xs_.back() + (y - ys_.back()) / rslope_;
  auto it = std::upper_bound(ys_.begin(), ys_.end(), y);
  std::size_t i = static_cast<std::size_t>(it - ys_.begin());
  const Rat& x0 = xs_[i - 1];
  const Rat& x1 = xs_[i];
  const Rat& y0 = ys_[i - 1];
  const Rat& y1 = ys_[i];
  return x0 + (x1 - x0) * (y - y0) / (y1 - y0);
}

PLMap PLMap::compose(const PLMap& rhs) const {
  std::vector<Rat> cuts = rhs.xs_;
  for (const Rat& x : xs_) cuts.push_back(rhs.eval_inverse(x));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<std::pair<Rat, Rat>> nodes;
  nodes.reserve(cuts.size());
  for (const Rat& x : cuts) nodes.emplace_back(x, eval(rhs.eval(x)));
  return from_nodes(std::move(nodes), lslope_ * rhs.lslope_, rslope_ * rhs.rslope_);
}

PLMap PLMap::inverse() const {
  std::vector<std::pair<Rat, Rat>> nodes;
  nodes.reserve(xs_.size());
  for (std::size_t i = 0; i < xs_.size(); ++i) nodes.emplace_back(ys_[i], xs_[i]);
  return from_nodes(std::move(nodes), 1 / lslope_, 1 / rslope_);
}

PLMap PLMap::power(long long n) const {
  PLMap acc;
  PLMap base = n >= 0 ? *this : inverse();
  long long k = n >= 0 ? n : -n;
  for (long long i = 0; i < k; ++i) acc = acc.compose(base);
  return acc;
}

bool PLMap::is_identity() const {
  return xs_.size() == 1 && xs_[0] == ys_[0] && lslope_ == 1 && rslope_ == 1;
}

std::optional<AffineMap> PLMap::as_affine() const {
  if (xs_.size() != 1 || lslope_ != rslope_) return std::nullopt;
  return AffineMap(lslope_, ys_[0] - lslope_ * xs_[0]);
}

bool PLMap::operator==(const PLMap& other) const {
  return xs_ == other.xs_ && ys_ == other.ys_ && lslope_ == other.lslope_ &&
         rslope_ == other.rslope_;
}

std::string PLMap::str() const {
  std::ostringstream os;
  os << "PL[" << xs_.size() << " nodes; slopes " << rat_str(lslope_) << "," << rat_str(rslope_)
     << "]";
  return os.str();
}

bool FixedSet::contains(const Rat& x) const {
  if (whole_line) return true;
  if (left_ray_end && x <= *left_ray_end) return true;
  if (right_ray_start && x >= *right_ray_start) return true;
  for (const Rat& p : points)
    if (p == x) return true;
  for (const auto& [a, b] : intervals)
    if (a <= x && x <= b) return true;
  return false;
}

FixedSet pl_fixed_points(const PLMap& m) {
  FixedSet out;
  if (m.is_identity()) {
    out.whole_line = true;
    return out;
  }
  const auto& xs = m.xs();
  const auto& ys = m.ys();
  std::vector<Rat> pts;
  std::vector<std::pair<Rat, Rat>> ivs;

  // left ray: y = y0 + l*(x - x0) on (-inf, x0]
  {
    const Rat& l = m.left_slope();
    if (l == 1) {
      if (ys.front() == xs.front()) out.left_ray_end = xs.front();
    } else {
      Rat star = (ys.front() - l * xs.front()) / (1 - l);
      if (star <= xs.front()) pts.push_back(star);
    }
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    Rat slope = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    if (slope == 1) {
      if (ys[i] == xs[i]) ivs.emplace_back(xs[i], xs[i + 1]);
    } else {
      Rat c = ys[i] - slope * xs[i];
      Rat star = c / (1 - slope);
      if (xs[i] <= star && star <= xs[i + 1]) pts.push_back(star);
    }
  }
  {
    const Rat& r = m.right_slope();
    if (r == 1) {
      if (ys.back() == xs.back()) out.right_ray_start = xs.back();
    } else {
      Rat star = (ys.back() - r * xs.back()) / (1 - r);
      if (star >= xs.back()) pts.push_back(star);
    }
  }

  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::sort(ivs.begin(), ivs.end());
  // merge touching intervals and absorb points on interval boundaries
  std::vector<std::pair<Rat, Rat>> merged;
  for (auto& iv : ivs) {
    if (!merged.empty() && merged.back().second == iv.first) merged.back().second = iv.second;
    else merged.push_back(iv);
  }
  // absorb the left ray into an adjacent interval
  if (out.left_ray_end && !merged.empty() && merged.front().first == *out.left_ray_end) {
    out.left_ray_end = merged.front().second;
    merged.erase(merged.begin());
  }
  if (out.right_ray_start && !merged.empty() && merged.back().second == *out.right_ray_start) {
    out.right_ray_start = merged.back().first;
    merged.pop_back();
  }
  for (const Rat& p : pts) {
    bool absorbed = false;
    if (out.left_ray_end && p <= *out.left_ray_end) absorbed = true;
    if (out.right_ray_start && p >= *out.right_ray_start) absorbed = true;
    for (auto& iv : merged)
      if (iv.first <= p && p <= iv.second) absorbed = true;
    if (!absorbed) out.points.push_back(p);
  }
  out.intervals = std::move(merged);
  return out;
}

}  // namespace solvline
