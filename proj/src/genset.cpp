#include "wordbound/genset.hpp"

#include <algorithm>
#include <unordered_set>

#include "wordbound/metric.hpp"

namespace wordbound {

////////////////////////////////////////////////////////////////////////
// GenSet
////////////////////////////////////////////////////////////////////////

GenSet::GenSet(Group group, std::vector<Element> letters)
    : group_(std::move(group)), letters_(std::move(letters)) {
  Element const e = group_.identity();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    group_.require(letters_[i]);
    if (letters_[i] == e) {
      throw PreconditionError("generating set letter is the identity");
    }
    if (!index_.emplace(letters_[i], i).second) {
      throw PreconditionError("generating set has two letters carrying the same element");
    }
  }
  inverse_.resize(letters_.size());
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    auto it = index_.find(group_.inv(letters_[i]));
    if (it == index_.end()) {
      throw PreconditionError("generating set is not closed under inversion");
    }
    inverse_[i] = it->second;
  }
}

std::optional<std::size_t> GenSet::find(Element const& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Element GenSet::evaluate(Word const& w) const {
  Element x = group_.identity();
  for (auto id : w) {
    if (id >= letters_.size()) {
      throw DomainError("word uses unknown symbol id " + std::to_string(id));
    }
    x = group_.mul(x, letters_[id]);
  }
  return x;
}

Word GenSet::inverse_word(Word const& w) const {
  Word out(w.rbegin(), w.rend());
  for (auto& id : out) {
    id = inverse_of(id);
  }
  return out;
}

GenSet make_symmetric(Group const& group, std::span<Element const> elements) {
  if (elements.empty()) {
    throw PreconditionError("make_symmetric needs at least one element");
  }
  Element const                                e = group.identity();
  std::vector<Element>                         letters;
  std::unordered_set<Element, ElementHash>     seen;
  for (auto const& x : elements) {
    group.require(x);
    if (x == e) {
      continue;
    }
    if (seen.insert(x).second) {
      letters.push_back(x);
    }
    Element y = group.inv(x);
    if (seen.insert(y).second) {
      letters.push_back(std::move(y));
    }
  }
  if (letters.empty()) {
    throw PreconditionError("generating set is empty: every element was the identity");
  }
  return GenSet(group, std::move(letters));
}

namespace {

  void standard_elements(Group const& g, std::vector<Element>& out) {
    switch (g.family()) {
      case Family::FiniteCyclic:
        if (g.modulus() > 1) {
          out.push_back(Element::cyclic(1));
        }
        break;
      case Family::IntVector:
        for (std::size_t i = 0; i < g.rank(); ++i) {
          std::vector<Integer> v(g.rank(), Integer(0));
          v[i] = 1;
          out.push_back(Element::vector(std::move(v)));
        }
        break;
      case Family::DihedralFinite:
        if (g.modulus() > 1) {
          out.push_back(Element::dihedral(1, false));
        }
        out.push_back(Element::dihedral(0, true));
        break;
      case Family::DihedralInfinite:
        out.push_back(Element::dihedral(1, false));
        out.push_back(Element::dihedral(0, true));
        break;
      case Family::Heisenberg:
        out.push_back(Element::heisenberg(1, 0, 0));
        out.push_back(Element::heisenberg(0, 1, 0));
        break;
      case Family::Free:
        for (std::size_t i = 1; i <= g.rank(); ++i) {
          out.push_back(Element::free_word({static_cast<int>(i)}));
        }
        break;
      case Family::Product: {
        std::vector<Element> a, b;
        standard_elements(g.left(), a);
        standard_elements(g.right(), b);
        for (auto& x : a) {
          out.push_back(Element::pair(std::move(x), g.right().identity()));
        }
        for (auto& y : b) {
          out.push_back(Element::pair(g.left().identity(), std::move(y)));
        }
        break;
      }
      case Family::CayleyTable:
        for (std::size_t i = 1; i < g.table().size(); ++i) {
          out.push_back(Element::table(i));
        }
        break;
    }
  }

}  // namespace

GenSet standard_genset(Group const& group) {
  std::vector<Element> elements;
  standard_elements(group, elements);
  if (elements.empty()) {
    throw PreconditionError("the trivial group " + group.name()
                            + " has no nonempty generating set");
  }
  return make_symmetric(group, elements);
}

////////////////////////////////////////////////////////////////////////
// Generation
////////////////////////////////////////////////////////////////////////

std::string to_string(Generation g) {
  switch (g) {
    case Generation::Yes:
      return "Yes";
    case Generation::No:
      return "No";
    case Generation::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

namespace {

  constexpr std::uint64_t closure_limit = 1'000'000;

  // Coordinates of a product tree of Z^d and Z/q leaves: 0 marks a free
  // coordinate, q > 0 a cyclic one.
  bool lattice_moduli(Group const& g, std::vector<Integer>& moduli) {
    switch (g.family()) {
      case Family::IntVector:
        moduli.insert(moduli.end(), g.rank(), Integer(0));
        return true;
      case Family::FiniteCyclic:
        moduli.emplace_back(g.modulus());
        return true;
      case Family::Product:
        return lattice_moduli(g.left(), moduli)
               && lattice_moduli(g.right(), moduli);
      default:
        return false;
    }
  }

  void flatten(Group const& g, Element const& x, std::vector<Integer>& out) {
    switch (g.family()) {
      case Family::IntVector:
        for (auto const& c : x.as<nf::Vector>().coords) {
          out.push_back(c);
        }
        break;
      case Family::FiniteCyclic:
        out.emplace_back(x.as<nf::Cyclic>().residue);
        break;
      case Family::Product:
        flatten(g.left(), x.left(), out);
        flatten(g.right(), x.right(), out);
        break;
      default:
        throw UnsupportedError("cannot flatten " + g.name() + " into a lattice");
    }
  }

  IntMatrix columns_matrix(std::vector<std::vector<Integer>> const& cols,
                           std::size_t                              rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (std::size_t i = 0; i < rows; ++i) {
        m(i, j) = cols[j][i];
      }
    }
    return m;
  }

  IntMatrix with_relations(IntMatrix const& vectors,
                           std::vector<Integer> const& moduli) {
    std::size_t extra = 0;
    for (auto const& q : moduli) {
      extra += q != 0 ? 1 : 0;
    }
    IntMatrix m(moduli.size(), vectors.cols() + extra);
    for (std::size_t i = 0; i < vectors.rows(); ++i) {
      for (std::size_t j = 0; j < vectors.cols(); ++j) {
        m(i, j) = vectors(i, j);
      }
    }
    std::size_t col = vectors.cols();
    for (std::size_t i = 0; i < moduli.size(); ++i) {
      if (moduli[i] != 0) {
        m(i, col++) = moduli[i];
      }
    }
    return m;
  }

  bool all_units(SmithForm const& form, std::size_t rows) {
    auto f = form.invariant_factors();
    if (f.size() < rows) {
      return false;
    }
    return std::all_of(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(rows),
                       [](Integer const& x) { return x == 1; });
  }

  std::uint64_t closure_size(GenSet const& s) {
    std::unordered_set<Element, ElementHash> seen{s.group().identity()};
    std::vector<Element>                     stack{s.group().identity()};
    while (!stack.empty()) {
      Element x = std::move(stack.back());
      stack.pop_back();
      for (auto const& l : s.letters()) {
        Element y = s.group().mul(x, l);
        if (seen.insert(y).second) {
          stack.push_back(std::move(y));
        }
      }
    }
    return seen.size();
  }

  GenerationCertificate closure_certificate(GenSet const& s) {
    GenerationCertificate cert;
    cert.method       = "closure";
    cert.closure_size = closure_size(s);
    auto order        = *s.group().order();
    cert.status = cert.closure_size == order ? Generation::Yes : Generation::No;
    cert.details = "closure has " + std::to_string(cert.closure_size) + " of "
                   + std::to_string(order) + " elements";
    return cert;
  }

  GenerationCertificate lattice_certificate(GenSet const&               s,
                                            std::vector<Integer> const& moduli) {
    std::vector<std::vector<Integer>> cols;
    for (auto const& l : s.letters()) {
      cols.emplace_back();
      flatten(s.group(), l, cols.back());
    }
    GenerationCertificate cert;
    cert.method  = "lattice";
    cert.lattice = with_relations(columns_matrix(cols, moduli.size()), moduli);
    cert.smith   = smith_normal_form(*cert.lattice);
    bool ok      = all_units(*cert.smith, moduli.size());
    cert.status  = ok ? Generation::Yes : Generation::No;
    cert.details = "invariant factors of letters + torsion relations: ";
    for (auto const& f : cert.smith->invariant_factors()) {
      cert.details += to_string(f) + " ";
    }
    return cert;
  }

  // Product of a finite factor F and an abelian lattice factor L. The
  // subgroup H = <S> is everything iff its image in F is onto and the
  // Schreier generators of H ∩ L span L.
  GenerationCertificate schreier_certificate(GenSet const& s, bool finite_left,
                                             std::vector<Integer> const& moduli) {
    Group const& G = s.group();
    Group const& F = finite_left ? G.left() : G.right();
    Group const& L = finite_left ? G.right() : G.left();
    auto part_f = [&](Element const& x) -> Element const& {
      return finite_left ? x.left() : x.right();
    };
    auto part_l = [&](Element const& x) -> Element const& {
      return finite_left ? x.right() : x.left();
    };
    std::size_t const rows = moduli.size();

    std::vector<std::vector<Integer>> letter_vec;
    for (auto const& l : s.letters()) {
      letter_vec.emplace_back();
      flatten(L, part_l(l), letter_vec.back());
    }

    std::unordered_map<Element, std::vector<Integer>, ElementHash> transversal;
    std::vector<Element> order{F.identity()};
    transversal.emplace(F.identity(), std::vector<Integer>(rows, Integer(0)));
    for (std::size_t head = 0; head < order.size(); ++head) {
      Element const f = order[head];
      for (std::size_t k = 0; k < s.size(); ++k) {
        Element g = F.mul(f, part_f(s.letter(k)));
        if (transversal.count(g) == 0) {
          std::vector<Integer> z = transversal.at(f);
          for (std::size_t i = 0; i < rows; ++i) {
            z[i] += letter_vec[k][i];
          }
          transversal.emplace(g, std::move(z));
          order.push_back(std::move(g));
        }
      }
    }

    GenerationCertificate cert;
    cert.method       = "schreier";
    cert.closure_size = order.size();
    if (order.size() != *F.order()) {
      cert.status  = Generation::No;
      cert.details = "projection to " + F.name() + " reaches "
                     + std::to_string(order.size()) + " of "
                     + std::to_string(*F.order()) + " elements";
      return cert;
    }
    std::vector<std::vector<Integer>> schreier;
    for (auto const& f : order) {
      auto const& zf = transversal.at(f);
      for (std::size_t k = 0; k < s.size(); ++k) {
        auto const& zg = transversal.at(F.mul(f, part_f(s.letter(k))));
        std::vector<Integer> v(rows);
        bool                 nonzero = false;
        for (std::size_t i = 0; i < rows; ++i) {
          v[i]    = zf[i] + letter_vec[k][i] - zg[i];
          nonzero = nonzero || v[i] != 0;
        }
        if (nonzero) {
          schreier.push_back(std::move(v));
        }
      }
    }
    if (schreier.empty()) {
      schreier.emplace_back(rows, Integer(0));
    }
    cert.lattice = with_relations(columns_matrix(schreier, rows), moduli);
    cert.smith   = smith_normal_form(*cert.lattice);
    bool ok      = all_units(*cert.smith, rows);
    cert.status  = ok ? Generation::Yes : Generation::No;
    cert.details = ok ? "projection onto " + F.name()
                            + " and Schreier lattice spans " + L.name()
                      : "Schreier lattice is a proper sublattice of " + L.name();
    return cert;
  }

  GenerationCertificate dihedral_certificate(GenSet const& s) {
    Integer                g = 0;
    std::optional<Integer> first_reflection;
    for (auto const& l : s.letters()) {
      auto const& d = l.as<nf::Dihedral>();
      if (!d.reflection) {
        g = gcd(g, d.rotation);
      } else if (!first_reflection) {
        first_reflection = d.rotation;
      } else {
        g = gcd(g, d.rotation - *first_reflection);
      }
    }
    GenerationCertificate cert;
    cert.method  = "dihedral";
    cert.status  = first_reflection && g == 1 ? Generation::Yes : Generation::No;
    cert.details = "translation subgroup index " + to_string(g)
                   + (first_reflection ? "" : ", no reflection letter");
    return cert;
  }

  Word commutator_word(GenSet const& s, std::size_t x, std::size_t y) {
    return {x, y, s.inverse_of(x), s.inverse_of(y)};
  }

  void append_power(GenSet const& s, Word& out, Word const& w, Integer k) {
    Word const base = k < 0 ? s.inverse_word(w) : w;
    for (k = abs(k); k > 0; --k) {
      out.insert(out.end(), base.begin(), base.end());
    }
  }

  GenerationCertificate heisenberg_certificate(GenSet const& s) {
    Group const& G = s.group();
    GenerationCertificate cert;
    cert.method = "heisenberg";

    std::vector<std::vector<Integer>> images;
    for (auto const& l : s.letters()) {
      auto const& h = l.as<nf::Heisenberg>();
      images.push_back({h.i, h.j});
    }
    std::vector<Integer> const moduli{0, 0};
    cert.lattice = columns_matrix(images, 2);
    cert.smith   = smith_normal_form(*cert.lattice);
    if (!all_units(*cert.smith, 2)) {
      cert.status  = Generation::No;
      cert.details = "abelianization image is a proper sublattice of Z^2";
      return cert;
    }

    // Central elements with known words; c-exponents combine by Bezout.
    std::vector<std::pair<Word, Integer>> central;
    Integer                               g = 0;
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = x + 1; y < s.size(); ++y) {
        Integer e = G.commutator(s.letter(x), s.letter(y)).as<nf::Heisenberg>().l;
        if (e != 0 && gcd(g, e) != g) {
          g = gcd(g, e);
          central.emplace_back(commutator_word(s, x, y), e);
        }
      }
    }
    if (g != 1) {
      // Commutator exponents are the 2x2 minors of the abelianized letters,
      // so a surjective abelianization always yields gcd 1.
      throw std::logic_error("internal error: commutators miss the centre");
    }
    // Coefficients k_i with sum k_i e_i = 1.
    std::vector<Integer> coef(central.size(), Integer(0));
    Integer              acc = 0;
    for (std::size_t i = 0; i < central.size(); ++i) {
      auto [d, x, y] = extended_gcd(acc, central[i].second);
      for (std::size_t j = 0; j < i; ++j) {
        coef[j] *= x;
      }
      coef[i] = y;
      acc     = d;
    }
    Word w;
    for (std::size_t i = 0; i < central.size(); ++i) {
      append_power(s, w, central[i].first, coef[i]);
    }
    cert.witnesses.emplace_back(Element::heisenberg(0, 0, 1), std::move(w));
    cert.status  = Generation::Yes;
    cert.details = "abelianization onto Z^2 and c expressed over S";
    return cert;
  }

  GenerationCertificate free_certificate(GenSet const& s, std::int64_t budget,
                                         std::vector<Word> const& supplied,
                                         SearchOptions const& options) {
    Group const& G = s.group();
    GenerationCertificate cert;
    cert.method = "free-witness";
    std::size_t missing = 0;
    for (std::size_t i = 1; i <= G.rank(); ++i) {
      Element const basis = Element::free_word({static_cast<int>(i)});
      bool          found = false;
      for (auto const& w : supplied) {
        if (s.evaluate(w) == basis) {
          cert.witnesses.emplace_back(basis, w);
          found = true;
          break;
        }
      }
      if (!found) {
        auto c = word_length(s, basis, static_cast<std::size_t>(budget), options);
        if (c.found()) {
          cert.witnesses.emplace_back(basis, c.witness);
          found = true;
        }
      }
      missing += found ? 0 : 1;
    }
    cert.status  = missing == 0 ? Generation::Yes : Generation::Inconclusive;
    cert.details = missing == 0 ? "every basis letter expressed over S"
                                : std::to_string(missing)
                                      + " basis letters not reached within budget";
    return cert;
  }

}  // namespace

bool lattice_generates(IntMatrix const& vectors, std::vector<Integer> const& moduli,
                       SmithForm* form) {
  if (vectors.rows() != moduli.size()) {
    throw PreconditionError("lattice vectors have the wrong dimension");
  }
  IntMatrix m = with_relations(vectors, moduli);
  if (m.cols() == 0) {
    return moduli.empty();
  }
  SmithForm f  = smith_normal_form(m);
  bool      ok = all_units(f, moduli.size());
  if (form) {
    *form = std::move(f);
  }
  return ok;
}

GenerationCertificate generates(GenSet const& s, std::int64_t budget,
                                std::vector<Word> const& supplied) {
  if (budget <= 0) {
    throw PreconditionError("generation budget must be positive");
  }
  Group const&  G = s.group();
  SearchOptions options;
  if (G.is_finite() && *G.order() <= closure_limit) {
    return closure_certificate(s);
  }
  std::vector<Integer> moduli;
  if (lattice_moduli(G, moduli)) {
    return lattice_certificate(s, moduli);
  }
  switch (G.family()) {
    case Family::DihedralInfinite:
      return dihedral_certificate(s);
    case Family::Heisenberg:
      return heisenberg_certificate(s);
    case Family::Free:
      return free_certificate(s, budget, supplied, options);
    case Family::Product: {
      std::vector<Integer> lm;
      if (G.left().is_finite() && lattice_moduli(G.right(), lm)) {
        return schreier_certificate(s, true, lm);
      }
      lm.clear();
      if (G.right().is_finite() && lattice_moduli(G.left(), lm)) {
        return schreier_certificate(s, false, lm);
      }
      break;
    }
    default:
      break;
  }
  GenerationCertificate cert;
  cert.details = "no generation procedure for " + G.name();
  return cert;
}

bool verify_certificate(GenSet const& s, GenerationCertificate const& cert) {
  if (cert.status != Generation::Yes) {
    return false;
  }
  for (auto const& [element, word] : cert.witnesses) {
    if (s.evaluate(word) != element) {
      return false;
    }
  }
  Group const& G = s.group();
  if (cert.method == "closure") {
    return closure_size(s) == *G.order() && cert.closure_size == *G.order();
  }
  if (cert.method == "lattice" || cert.method == "schreier"
      || cert.method == "heisenberg") {
    if (!cert.lattice || !cert.smith
        || !verify_smith_form(*cert.lattice, *cert.smith)
        || !all_units(*cert.smith, cert.lattice->rows())) {
      return false;
    }
  }
  if (cert.method == "lattice") {
    std::vector<Integer> col;
    for (std::size_t j = 0; j < s.size(); ++j) {
      col.clear();
      flatten(G, s.letter(j), col);
      for (std::size_t i = 0; i < col.size(); ++i) {
        if ((*cert.lattice)(i, j) != col[i]) {
          return false;
        }
      }
    }
    return true;
  }
  if (cert.method == "schreier") {
    return generates(s, 1).status == Generation::Yes;
  }
  if (cert.method == "heisenberg") {
    for (std::size_t j = 0; j < s.size(); ++j) {
      auto const& h = s.letter(j).as<nf::Heisenberg>();
      if ((*cert.lattice)(0, j) != h.i || (*cert.lattice)(1, j) != h.j) {
        return false;
      }
    }
    return std::any_of(cert.witnesses.begin(), cert.witnesses.end(),
                       [](auto const& p) {
                         return p.first == Element::heisenberg(0, 0, 1);
                       });
  }
  if (cert.method == "dihedral") {
    return dihedral_certificate(s).status == Generation::Yes;
  }
  if (cert.method == "free-witness") {
    return cert.witnesses.size() == G.rank();
  }
  return false;
}

////////////////////////////////////////////////////////////////////////
// QuotientMap
////////////////////////////////////////////////////////////////////////

QuotientMap QuotientMap::project_left(Group const& product) {
  return QuotientMap(Rule::ProjectLeft, product, product.left());
}

QuotientMap QuotientMap::project_right(Group const& product) {
  return QuotientMap(Rule::ProjectRight, product, product.right());
}

QuotientMap QuotientMap::reduce_mod(std::int64_t q) {
  return QuotientMap(Rule::ReduceMod, Group::integers(), Group::finite_cyclic(q));
}

QuotientMap QuotientMap::abelianize() {
  return QuotientMap(Rule::Abelianize, Group::heisenberg(), Group::int_vector(2));
}

QuotientMap QuotientMap::dihedral_reduce(std::int64_t n) {
  return QuotientMap(Rule::DihedralReduce, Group::infinite_dihedral(),
                     Group::dihedral(n));
}

Element QuotientMap::apply(Element const& g) const {
  source_.require(g);
  switch (rule_) {
    case Rule::ProjectLeft:
      return g.left();
    case Rule::ProjectRight:
      return g.right();
    case Rule::ReduceMod:
      return Element::cyclic(
          floor_mod(g.as<nf::Vector>().coords[0], target_.modulus())
              .convert_to<std::int64_t>());
    case Rule::Abelianize: {
      auto const& h = g.as<nf::Heisenberg>();
      return Element::vector({h.i, h.j});
    }
    case Rule::DihedralReduce: {
      auto const& d = g.as<nf::Dihedral>();
      return Element::dihedral(floor_mod(d.rotation, target_.modulus()),
                               d.reflection);
    }
  }
  throw DomainError("unknown quotient rule");
}

GenSet project_genset(QuotientMap const& pi, GenSet const& s) {
  if (s.group() != pi.source()) {
    throw DomainError("generating set is not over the quotient source");
  }
  std::vector<Element> images;
  Element const        e = pi.target().identity();
  for (auto const& l : s.letters()) {
    Element x = pi.apply(l);
    if (x != e) {
      images.push_back(std::move(x));
    }
  }
  if (images.empty()) {
    throw std::logic_error("internal error: every letter maps to the identity");
  }
  return make_symmetric(pi.target(), images);
}

}  // namespace wordbound
