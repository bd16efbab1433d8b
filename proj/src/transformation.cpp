#include "syncon/transformation.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "syncon/error.hpp"

namespace syncon {

  ////////////////////////////////////////////////////////////////////////
  // Transformation
  ////////////////////////////////////////////////////////////////////////

  Transformation::Transformation(std::vector<Element> image, Provenance provenance)
      : image_(std::move(image)), provenance_(std::move(provenance)) {
    for (auto v : image_) {
      if (v >= image_.size()) {
        throw DomainError("transformation image entry " + std::to_string(v)
                          + " out of range for degree "
                          + std::to_string(image_.size()));
      }
    }
  }

  Transformation Transformation::identity(std::size_t n) {
    std::vector<Element> image(n);
    for (std::size_t i = 0; i < n; ++i) {
      image[i] = static_cast<Element>(i);
    }
    return Transformation(std::move(image), CompositeProvenance{});
  }

  Transformation Transformation::constant(std::size_t n, Element value) {
    return Transformation(std::vector<Element>(n, value));
  }

  Transformation Transformation::then(Transformation const& next) const {
    if (next.degree() != degree()) {
      throw DomainError("composing transformations of different degrees");
    }
    std::vector<Element> image(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
      image[i] = next.image_[image_[i]];
    }
    return Transformation(std::move(image));
  }

  Subset Transformation::preimage(Subset const& subset) const {
    std::vector<bool> bits(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
      bits[i] = subset.contains(image_[i]);
    }
    return Subset::from_bits(std::move(bits));
  }

  std::string Transformation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < image_.size(); ++i) {
      os << (i == 0 ? "" : " ") << image_[i];
    }
    os << ']';
    return os.str();
  }

  std::size_t ImageHash::operator()(std::vector<Element> const& image) const noexcept {
    std::size_t h = image.size();
    for (auto v : image) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // TransformationMonoid
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::size_t>
  TransformationMonoid::index_of(std::vector<Element> const& image) const {
    auto it = index_.find(image);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<Transformation> TransformationMonoid::sorted() const {
    auto out = elements_;
    std::sort(out.begin(), out.end());
    return out;
  }

  Transformation TransformationMonoid::replay(std::span<std::size_t const> sequence) const {
    auto f = Transformation::identity(degree_);
    for (auto g : sequence) {
      if (g >= generators_.size()) {
        throw DomainError("generator index " + std::to_string(g) + " out of range");
      }
      f = f.then(generators_[g]);
    }
    return f;
  }

  std::vector<std::size_t> const& TransformationMonoid::word_of(std::size_t i) const {
    return std::get<CompositeProvenance>(elements_.at(i).provenance()).generators;
  }

  std::size_t full_transformation_monoid_size(std::size_t n) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (r > std::numeric_limits<std::size_t>::max() / n) {
        return std::numeric_limits<std::size_t>::max();
      }
      r *= n;
    }
    return r;
  }

  TransformationMonoid close_under_composition(std::size_t                 degree,
                                               std::vector<Transformation> generators,
                                               std::optional<std::size_t>  cap) {
    for (auto const& g : generators) {
      if (g.degree() != degree) {
        throw DomainError("generator of degree " + std::to_string(g.degree())
                          + " in a monoid of degree " + std::to_string(degree));
      }
    }
    auto const limit = cap.value_or(full_transformation_monoid_size(degree));

    TransformationMonoid m;
    m.degree_     = degree;
    m.generators_ = std::move(generators);

    auto add = [&m, limit](std::vector<Element> image, std::vector<std::size_t> word) {
      if (m.elements_.size() >= limit) {
        throw InvariantViolation("monoid closure exceeded the cap of "
                                 + std::to_string(limit) + " elements");
      }
      m.index_.emplace(image, m.elements_.size());
      m.elements_.emplace_back(std::move(image), CompositeProvenance{std::move(word)});
    };

    add(Transformation::identity(degree).image(), {});
    std::vector<Element> image(degree);
    for (std::size_t next = 0; next < m.elements_.size(); ++next) {
      for (std::size_t g = 0; g < m.generators_.size(); ++g) {
        auto const& f   = m.elements_[next].image();
        auto const& gen = m.generators_[g].image();
        for (std::size_t i = 0; i < degree; ++i) {
          image[i] = gen[f[i]];
        }
        if (!m.index_.contains(image)) {
          auto word = m.word_of(next);
          word.push_back(g);
          add(image, std::move(word));
        }
      }
    }
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Translations
  ////////////////////////////////////////////////////////////////////////

  std::vector<Transformation> elementary_translations(FiniteAlgebra const& algebra) {
    auto const                                                       n = algebra.size();
    std::vector<Transformation>                                      out;
    std::unordered_map<std::vector<Element>, std::size_t, ImageHash> seen;
    auto const&                                                      sig = algebra.signature();
    for (std::size_t s = 0; s < sig.size(); ++s) {
      auto const k = sig[s].arity;
      if (k == 0) {
        continue;
      }
      auto const others = table_size(n, k - 1);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t r = 0; r < others; ++r) {
          auto fixed = tuple_at(n, k - 1, r);
          std::vector<Element> args(k);
          for (std::size_t j = 0, f = 0; j < k; ++j) {
            args[j] = j == i ? 0 : fixed[f++];
          }
          std::vector<Element> image(n);
          auto                 call = args;
          for (std::size_t x = 0; x < n; ++x) {
            call[i]  = static_cast<Element>(x);
            image[x] = algebra.apply(s, call);
          }
          if (seen.contains(image)) {
            continue;
          }
          seen.emplace(image, out.size());
          out.emplace_back(std::move(image),
                           ElementaryProvenance{s, sig[s].name, i, std::move(args)});
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  TransformationMonoid translation_monoid(FiniteAlgebra const&       algebra,
                                          std::optional<std::size_t> cap) {
    return close_under_composition(algebra.size(), elementary_translations(algebra), cap);
  }

  Transformation transformation_of_linear_term(FiniteAlgebra const& algebra,
                                               Term const&          term,
                                               std::string const&   variable,
                                               Assignment const&    assignment) {
    if (!is_linear_in(term, variable)) {
      throw DomainError("term '" + term.to_string() + "' is not linear in '"
                        + variable + "'");
    }
    for (auto const& v : variables(term)) {
      if (v != variable && !assignment.contains(v)) {
        throw DomainError("variable '" + v + "' is not assigned");
      }
    }
    Assignment           full = assignment;
    std::vector<Element> image(algebra.size());
    for (std::size_t a = 0; a < algebra.size(); ++a) {
      full[variable] = static_cast<Element>(a);
      image[a]       = eval_term(algebra, term, full);
    }
    Assignment params = assignment;
    params.erase(variable);
    return Transformation(std::move(image), TermProvenance{term, variable, std::move(params)});
  }

  LinearTermWitness linear_term_of(TransformationMonoid const& monoid,
                                   std::size_t                 i,
                                   std::string const&          variable) {
    LinearTermWitness out{Term::variable(variable), {}};
    std::size_t       next_param = 2;
    for (auto g : monoid.word_of(i)) {
      auto const* prov
          = std::get_if<ElementaryProvenance>(&monoid.generators()[g].provenance());
      if (prov == nullptr) {
        throw DomainError("generator " + std::to_string(g)
                          + " is not an elementary translation");
      }
      std::vector<Term> children;
      for (std::size_t j = 0; j < prov->arguments.size(); ++j) {
        if (j == prov->coordinate) {
          children.push_back(out.term);
        } else {
          auto name = "x" + std::to_string(next_param++);
          out.parameters.emplace(name, prov->arguments[j]);
          children.push_back(Term::variable(std::move(name)));
        }
      }
      out.term = Term::apply(prov->symbol_name, std::move(children));
    }
    return out;
  }

}  // namespace syncon
