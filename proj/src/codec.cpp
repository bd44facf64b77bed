#include "flatcover/codec.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "flatcover/error.hpp"
#include "flatcover/johnson.hpp"

namespace flatcover {

LocalCover local_cover_general(const Matroid& m, ElementSet x) {
  if (x.size() != m.rank() || !x.within(m.ground_size())) {
    throw Error(ErrorCode::PreconditionViolated, "local cover needs an r-subset of the ground set");
  }
  LocalCover out{x, {}};
  for (int e : x.elements()) {
    const ElementSet smaller = x.without(e);
    out.flats.push_back({m.closure(smaller), m.rank(smaller)});
  }
  canonicalize(out.flats);
  return out;
}

LocalCover local_cover_dependent(const Matroid& m, ElementSet x) {
  if (x.size() != m.rank() || !x.within(m.ground_size())) {
    throw Error(ErrorCode::PreconditionViolated, "local cover needs an r-subset of the ground set");
  }
  const int rank = m.rank(x);
  if (rank == m.rank()) throw Error(ErrorCode::NotDependent, "{" + x.to_string() + "} is a basis");
  LocalCover out{x, {{m.closure(x), rank}}};
  if (rank == m.rank() - 1) {
    const ElementSet circuit = unique_circuit(m, x);
    out.flats.push_back({m.closure(circuit), circuit.size() - 1});
  }
  canonicalize(out.flats);
  return out;
}

const char* to_string(EncodingMethod method) {
  return method == EncodingMethod::KW ? "kw" : "dominating";
}

EncodingMethod parse_method(const std::string& name) {
  if (name == "kw") return EncodingMethod::KW;
  if (name == "dominating") return EncodingMethod::Dominating;
  throw Error(ErrorCode::Parse, "unknown encoding method '" + name + "'");
}

EncodedMatroid encode_dominating(const Matroid& m) {
  EncodedMatroid out{m.ground_size(), m.rank(), EncodingMethod::Dominating, false, {}, {}};
  if (m.rank() == 0 || m.rank() == m.ground_size()) return out;
  const JohnsonGraph g(m.ground_size(), m.rank());
  for (ElementSet x : greedy_dominating_set(g)) {
    auto local = local_cover_general(m, x);
    out.cover.insert(out.cover.end(), local.flats.begin(), local.flats.end());
  }
  canonicalize(out.cover);
  return out;
}

KWMatroidEncoding encode_kw_detailed(const Matroid& m) {
  const int n = m.ground_size();
  const int r = m.rank();
  if (r <= 0 || 2 * r > n) {
    throw Error(ErrorCode::RankOutOfRange, "kw encoding needs 0 < r <= n/2, got n=" + std::to_string(n) +
                                               " r=" + std::to_string(r));
  }
  const JohnsonGraph g(n, r);
  std::vector<Vertex> k;
  for (ElementSet x : non_bases(m)) k.push_back(g.index_of(x));

  KWMatroidEncoding out;
  out.procedure = kw_encode(g, k);
  out.certificate = {n, r, EncodingMethod::KW, false, {}, {}};
  for (Vertex v : out.procedure.selected) {
    auto local = local_cover_dependent(m, g.vertex_at(v));
    out.certificate.cover.insert(out.certificate.cover.end(), local.flats.begin(), local.flats.end());
  }
  canonicalize(out.certificate.cover);
  // Both lists are ascending in vertex order, which is mask order.
  std::vector<Vertex> residual;
  std::set_intersection(k.begin(), k.end(), out.procedure.available.begin(), out.procedure.available.end(),
                        std::back_inserter(residual));
  for (Vertex v : residual) out.certificate.residual.push_back(g.vertex_at(v));
  return out;
}

EncodedMatroid encode_kw(const Matroid& m) { return encode_kw_detailed(m).certificate; }

EncodedMatroid encode(const Matroid& m, EncodingMethod method) {
  const int n = m.ground_size();
  const int r = m.rank();
  if (r == 0 || r == n) return {n, r, method, false, {}, {}};
  if (method == EncodingMethod::Dominating) return encode_dominating(m);
  if (2 * r <= n) return encode_kw(m);
  EncodedMatroid out = encode_kw(dual(m));
  out.r = r;
  out.dualized = true;
  return out;
}

Matroid decode(const EncodedMatroid& e) {
  if (e.n < 0 || e.n > kMaxGroundSize || e.r < 0 || e.r > e.n) {
    throw Error(ErrorCode::InvalidCertificate, "bad certificate sizes");
  }
  const int stored = e.stored_rank();
  for (const auto& f : e.cover) {
    if (!f.flat.within(e.n) || f.rank < 0 || f.rank > e.n) {
      throw Error(ErrorCode::InvalidCertificate, "cover entry outside the ground set");
    }
  }
  for (ElementSet x : e.residual) {
    if (!x.within(e.n) || x.size() != stored) {
      throw Error(ErrorCode::InvalidCertificate, "residual entry {" + x.to_string() + "} is not an r-set");
    }
  }
  std::vector<ElementSet> residual = e.residual;
  std::sort(residual.begin(), residual.end());
  std::vector<ElementSet> bases;
  for (ElementSet x : subsets_of_size(e.n, stored)) {
    if (std::binary_search(residual.begin(), residual.end(), x)) continue;
    const bool covered = std::any_of(e.cover.begin(), e.cover.end(),
                                     [x](const FlatWithRank& f) { return flat_covers_set(f, x); });
    if (!covered) bases.push_back(x);
  }
  try {
    Matroid m = Matroid::from_bases(e.n, stored, std::move(bases));
    return e.dualized ? dual(m) : m;
  } catch (const Error& err) {
    throw Error(ErrorCode::InvalidCertificate, err.what());
  }
}

CertificateSize certificate_size(const EncodedMatroid& e, std::size_t non_basis_count) {
  const double vertices = static_cast<double>(binomial(e.n, e.stored_rank()));
  const double per_vertex = vertices > 1 ? std::log2(vertices) : 0.0;
  const double per_flat = e.n + std::log2(static_cast<double>(e.n) + 1.0);
  return {
      .cover_bits = static_cast<double>(e.cover.size()) * per_flat,
      .residual_bits = static_cast<double>(e.residual.size()) * per_vertex,
      .listing_bits = static_cast<double>(non_basis_count) * per_vertex,
      .bitmap_bits = vertices,
  };
}

void write_encoded(std::ostream& os, const EncodedMatroid& e) {
  os << "encmatroid 1 " << e.n << ' ' << e.r << ' ' << to_string(e.method) << ' ' << (e.dualized ? 1 : 0) << '\n';
  auto cover = e.cover;
  canonicalize(cover);
  for (const auto& f : cover) {
    os << "F " << f.rank;
    if (!f.flat.empty()) os << ' ' << f.flat.to_string();
    os << '\n';
  }
  auto residual = e.residual;
  std::sort(residual.begin(), residual.end());
  for (ElementSet x : residual) {
    os << 'N';
    if (!x.empty()) os << ' ' << x.to_string();
    os << '\n';
  }
}

std::string to_text(const EncodedMatroid& e) {
  std::ostringstream os;
  write_encoded(os, e);
  return os.str();
}

EncodedMatroid read_encoded(std::istream& is) {
  std::string line;
  EncodedMatroid out;
  bool have_header = false;
  while (std::getline(is, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream in(line);
    if (!have_header) {
      std::string tag;
      std::string method;
      int version = 0;
      int dualized = -1;
      if (!(in >> tag >> version >> out.n >> out.r >> method >> dualized) || tag != "encmatroid" || version != 1 ||
          (dualized != 0 && dualized != 1)) {
        throw Error(ErrorCode::Parse, "expected 'encmatroid 1 <n> <r> <method> <0|1>', got '" + line + "'");
      }
      if (out.n < 0 || out.n > kMaxGroundSize || out.r < 0 || out.r > out.n) {
        throw Error(ErrorCode::Parse, "bad sizes in header");
      }
      out.method = parse_method(method);
      out.dualized = dualized == 1;
      have_header = true;
      continue;
    }
    std::string kind;
    in >> kind;
    std::string rest;
    std::getline(in, rest);
    if (kind == "F") {
      std::istringstream fields(rest);
      int rank = -1;
      if (!(fields >> rank) || rank < 0 || rank > out.n) throw Error(ErrorCode::Parse, "bad flat line '" + line + "'");
      std::string elements;
      std::getline(fields, elements);
      out.cover.push_back({parse_element_line(elements, out.n), rank});
    } else if (kind == "N") {
      out.residual.push_back(parse_element_line(rest, out.n));
    } else {
      throw Error(ErrorCode::Parse, "unknown line '" + line + "'");
    }
  }
  if (!have_header) throw Error(ErrorCode::Parse, "missing encmatroid header");
  return out;
}

}  // namespace flatcover
