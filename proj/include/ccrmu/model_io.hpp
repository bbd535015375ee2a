#pragma once

#include <ccrmu/model.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ccrmu
{

/// A model file: the model plus its optional designated root.
struct model_file
{
  model m;
  std::optional<std::size_t> root;
};

/// Reads the JSON model format
///
///   {"alphabet": ["a","b"], "atoms": ["p"], "states": ["s","t"],
///    "transitions": [{"from":"s","action":"a","to":"t"}],
///    "valuation": {"p": ["s"]}, "root": "s"}
///
/// Throws `errc::invalid_model` on malformed input.
model_file model_from_json( std::string_view text );
std::string model_to_json( const model& m, std::optional<std::size_t> root = std::nullopt );

model_file load_model( const std::string& path );

/// Resolves "file.json#state"; without '#' the file's root (or its first
/// state) is the point.
pointed_model load_pointed( const std::string& selector );

using state_pair = std::pair<std::size_t, std::size_t>;

/// A relation as a JSON list of [left-id, right-id] pairs.
std::string relation_to_json( const std::vector<state_pair>& pairs, const model& m, const model& n );
std::vector<state_pair> relation_from_json( std::string_view text, const model& m, const model& n );

std::string read_file( const std::string& path );
void write_file( const std::string& path, const std::string& content );

} // namespace ccrmu
