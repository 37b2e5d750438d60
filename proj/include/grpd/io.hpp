#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "grpd/category.hpp"
#include "grpd/correspondence.hpp"
#include "grpd/hilbert_module.hpp"
#include "grpd/kgraph.hpp"
#include "grpd/self_similar.hpp"
#include "grpd/star_algebra.hpp"

namespace grpd::io {

using Json = nlohmann::json;
namespace fs = std::filesystem;

// All loaders throw Error(InputError) on malformed files, including unknown
// keys. Nested groupoids may be given inline or as a path relative to `base`.
Json load_json(const fs::path& path);

GroupoidRef groupoid_from_json(const Json& j, const fs::path& base = {});
GroupoidRef load_groupoid(const fs::path& path);

CorrRef correspondence_from_json(const Json& j, const fs::path& base = {});
CorrRef load_correspondence(const fs::path& path);

// {"id": scalar} with scalar "p/q+r/si", an integer or
// [re_num, re_den, im_num, im_den].
AlgebraElement element_from_json(const Json& j, const GroupoidRef& g);
ModuleElement module_element_from_json(const Json& j, const CorrRef& x);
// [[f1, f2], ...] elementary tensors.
Tensor tensor_from_json(const Json& j, const CorrRef& x, const CorrRef& y);

CategoryRef category_from_json(const Json& j);
FunctorRef fibration_from_json(const Json& j, const fs::path& base = {});

struct KGraphFile {
  KGraphSpec spec;
  std::vector<int> box;  // "truncation", default 2 per color
};
KGraphFile kgraph_from_json(const Json& j, const fs::path& base = {});

SelfSimilarAction selfsim_from_json(const Json& j, const fs::path& base = {});

enum class FileKind { kGroupoid, kCorrespondence, kCategory, kFibration, kKGraph, kSelfSimilar, kUnknown };
FileKind detect_kind(const Json& j);

Json to_json(const FiniteGroupoid& g);
Json to_json(const Correspondence& x);
Json to_json(const AlgebraElement& a);
Json to_json(const ModuleElement& v);

}  // namespace grpd::io
