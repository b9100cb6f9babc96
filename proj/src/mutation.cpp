#include "helixlab/mutation.hpp"

#include <cctype>
#include <sstream>

#include "helixlab/error.hpp"

namespace helixlab {

BraidWord BraidWord::parse(std::string_view text) {
  std::vector<Move> moves;
  std::size_t i = 0;
  auto space = [&](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; };
  while (true) {
    while (i < text.size() && space(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !space(text[i])) ++i;
    std::string_view tok = text.substr(start, i - start);

    Side side;
    if (tok.front() == 'L') {
      side = Side::Left;
    } else if (tok.front() == 'R') {
      side = Side::Right;
    } else {
      throw Error(Errc::ParseError, "braid move '" + std::string(tok) + "' must start with L or R");
    }
    std::string_view digits = tok.substr(1);
    if (digits.empty() || digits.size() > 9 || digits.front() == '0') {
      throw Error(Errc::ParseError, "bad position in braid move '" + std::string(tok) + "'");
    }
    std::size_t pos = 0;
    for (char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw Error(Errc::ParseError, "bad position in braid move '" + std::string(tok) + "'");
      }
      pos = pos * 10 + static_cast<std::size_t>(ch - '0');
    }
    moves.push_back({side, pos});
  }
  return BraidWord(std::move(moves));
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& m : moves_) {
    if (!out.empty()) out += ' ';
    out += m.side == Side::Left ? 'L' : 'R';
    out += std::to_string(m.position);
  }
  return out;
}

void mutate_in_place(const GramForm& g, Collection& c, Side side, std::size_t position) {
  KVector& u = c.elements[position - 1];
  KVector& v = c.elements[position];
  const Integer m = euler_pair(g, u, v);
  if (side == Side::Left) {
    KVector moved = v - m * u;
    v = std::move(u);
    u = std::move(moved);
  } else {
    KVector moved = u - m * v;
    u = std::move(v);
    v = std::move(moved);
  }
}

namespace {

void require_sod(const GramForm& g, const Collection& c) {
  const SodVerdict verdict = check_sod_basis(g, c);
  if (!verdict.ok()) {
    std::ostringstream msg;
    msg << "collection is not a semiorthogonal basis";
    for (std::size_t i = 0; i < verdict.exceptional.size(); ++i)
      if (!verdict.exceptional[i]) msg << "; element " << i + 1 << " not exceptional";
    for (const auto& p : verdict.violations)
      msg << "; chi(u" << p.later << ", u" << p.earlier << ") = " << p.chi.get_str();
    if (!verdict.unimodular) msg << "; det = " << verdict.determinant.get_str();
    throw Error(Errc::NotSODBasis, msg.str());
  }
}

void require_position(const Collection& c, std::size_t position) {
  if (position < 1 || position + 1 > c.size()) {
    throw Error(Errc::BadPosition, "position " + std::to_string(position) + " outside 1.." +
                                       std::to_string(c.size() > 0 ? c.size() - 1 : 0));
  }
}

}  // namespace

Collection mutate(const GramForm& g, const Collection& c, Side side, std::size_t position) {
  require_sod(g, c);
  require_position(c, position);
  Collection out = c;
  mutate_in_place(g, out, side, position);
  return out;
}

Collection apply_word(const GramForm& g, const Collection& c, const BraidWord& w) {
  require_sod(g, c);
  for (const auto& m : w.moves()) require_position(c, m.position);
  Collection out = c;
  // Mutation preserves the basis property, so one check up front suffices.
  for (const auto& m : w.moves()) mutate_in_place(g, out, m.side, m.position);
  return out;
}

IntMatrix SerreOperator::twist_by_K() const { return kappa; }

IntMatrix SerreOperator::twist_by_minus_K() const {
  auto inv = kappa.integer_inverse();
  if (!inv) throw Error(Errc::InvalidGram, "Serre operator is not invertible over Z");
  return *inv;
}

KVector SerreOperator::apply(const KVector& v) const { return KVector(kappa * v.coords()); }

SerreOperator serre_operator(const GramForm& g) {
  auto inv = g.matrix().integer_inverse();
  if (!inv) throw Error(Errc::InvalidGram, "Gram form is not unimodular");
  return {-(*inv * g.matrix().transposed())};
}

Collection helix_shift(const GramForm& g, const Collection& c, HelixDirection dir) {
  require_sod(g, c);
  const SerreOperator s = serre_operator(g);
  Collection out;
  const std::size_t n = c.size();
  out.elements.reserve(n);
  if (dir == HelixDirection::Forward) {
    const IntMatrix t = s.twist_by_minus_K();
    for (std::size_t i = 1; i < n; ++i) out.elements.push_back(c[i]);
    out.elements.push_back(KVector(t * c[0].coords()));
  } else {
    const IntMatrix t = s.twist_by_K();
    out.elements.push_back(KVector(t * c[n - 1].coords()));
    for (std::size_t i = 0; i + 1 < n; ++i) out.elements.push_back(c[i]);
  }
  return out;
}

}  // namespace helixlab
