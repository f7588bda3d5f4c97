#include "gitkit_cli/problem.hpp"

#include <fstream>
#include <sstream>

#include "gitkit/error.hpp"

namespace gitkit::cli {

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, pointer + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& pointer) {
  auto it = j.find(key);
  if (it == j.end()) fail(pointer + "/" + key, "missing field");
  return *it;
}

const Json& array_at(const Json& j, const std::string& pointer) {
  if (!j.is_array()) fail(pointer, "expected an array");
  return j;
}

void parse_reference(const Json& ref, Problem& p) {
  if (!ref.is_object()) fail("/reference", "expected an object");
  const std::size_t sub = p.embedding ? p.embedding->cols() : 0;
  if (ref.contains("git_table")) {
    const Json& rows = array_at(ref["git_table"], "/reference/git_table");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string at = "/reference/git_table/" + std::to_string(r);
      if (!rows[r].is_object()) fail(at, "expected an object");
      GitClaim c;
      c.degrees = int_vectors_from_json(require(rows[r], "degrees", at), at + "/degrees", p.rank);
      if (c.degrees.empty()) fail(at + "/degrees", "expected at least one degree");
      c.cone_generators = int_vectors_from_json(require(rows[r], "cone", at), at + "/cone", p.rank);
      p.git_claims.push_back(std::move(c));
    }
  }
  if (ref.contains("downgrade_table")) {
    if (!p.embedding) fail("/reference/downgrade_table", "requires subtorus_embedding");
    const Json& rows = array_at(ref["downgrade_table"], "/reference/downgrade_table");
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string at = "/reference/downgrade_table/" + std::to_string(r);
      if (!rows[r].is_object()) fail(at, "expected an object");
      DowngradeClaim c;
      c.degree = int_vector_from_json(require(rows[r], "degree", at), at + "/degree", sub);
      c.union_degrees = int_vectors_from_json(require(rows[r], "union", at), at + "/union", p.rank);
      c.cone_generators = int_vectors_from_json(require(rows[r], "cone", at), at + "/cone", sub);
      p.downgrade_claims.push_back(std::move(c));
    }
  }
}

}  // namespace

Problem parse_problem(const Json& doc) {
  if (!doc.is_object()) fail("", "expected a JSON object");
  Problem p;
  const Json& rank = require(doc, "rank", "");
  if (!rank.is_number_integer() || rank.get<std::int64_t>() <= 0) fail("/rank", "expected a positive integer");
  if (rank.get<std::int64_t>() > static_cast<std::int64_t>(kMaxProblemRank))
    throw Error(ErrorKind::Unsupported, "/rank: rank " + std::to_string(rank.get<std::int64_t>()) +
                                            " exceeds the limit of " + std::to_string(kMaxProblemRank));
  p.rank = rank.get<std::size_t>();
  p.cone_rays = int_vectors_from_json(require(doc, "cone_rays", ""), "/cone_rays", p.rank);

  if (doc.contains("subtorus_embedding")) {
    const Json& m = array_at(doc["subtorus_embedding"], "/subtorus_embedding");
    if (m.size() != p.rank)
      throw Error(ErrorKind::DimensionMismatch, "/subtorus_embedding: expected " + std::to_string(p.rank) +
                                                    " rows, got " + std::to_string(m.size()));
    const std::size_t sub = m.empty() || !m[0].is_array() ? 0 : m[0].size();
    if (sub > p.rank) fail("/subtorus_embedding/0", "more columns than rows");
    p.embedding = IntMatrix::from_rows(int_vectors_from_json(m, "/subtorus_embedding", sub), sub);
  }
  if (doc.contains("options")) {
    const Json& opts = doc["options"];
    if (!opts.is_object()) fail("/options", "expected an object");
    if (opts.contains("box")) {
      const Json& box = opts["box"];
      if (!box.is_number_unsigned() || box.get<std::uint64_t>() == 0 || box.get<std::uint64_t>() > 1000)
        fail("/options/box", "expected an integer in [1, 1000]");
      p.box = box.get<unsigned>();
    }
  }
  if (doc.contains("reference")) parse_reference(doc["reference"], p);
  return p;
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, "/: malformed JSON (" + std::string(e.what()) + ")");
  }
  return parse_problem(doc);
}

Json echo(const Problem& p) {
  Json out;
  out["rank"] = p.rank;
  out["cone_rays"] = to_json(p.cone_rays);
  if (p.embedding) out["subtorus_embedding"] = to_json(*p.embedding);
  return out;
}

}  // namespace gitkit::cli
