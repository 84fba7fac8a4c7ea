#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "bipoisson/tensor.hpp"

namespace bipoisson {

enum class PairSymmetry { Skew, Sym, None };

std::string to_string(PairSymmetry s);
/// Skew if T_{klij} = -T_{ijkl} everywhere, else Sym if equal, else None.
PairSymmetry detect_symmetry(const Tensor4& t);

/// {"N", "symmetry", "entries": [{"i","j","k","l","coeff"}]}. Only the
/// representative with (i,j) <= (k,l) of each pair is written unless the
/// symmetry is None. Throws ParseError on malformed input, including a
/// second listing of the same slot with a conflicting value.
nlohmann::ordered_json tensor_to_json(const Tensor4& t);
Tensor4 tensor_from_json(const nlohmann::json& j);

/// {"N", "entries": [{"i","j","coeff"}]}
nlohmann::ordered_json matrix_to_json(const MatrixX& m);
MatrixX matrix_from_json(const nlohmann::json& j);

/// Reads a JSON document; ParseError on I/O or syntax problems.
nlohmann::json read_json_file(const std::filesystem::path& path);
/// Writes with two-space indentation and a trailing newline.
void write_json_file(const std::filesystem::path& path, const nlohmann::ordered_json& doc);

Tensor4 load_tensor(const std::filesystem::path& path);
MatrixX load_matrix(const std::filesystem::path& path);

}  // namespace bipoisson
