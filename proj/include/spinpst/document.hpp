#pragma once

#include <filesystem>
#include <string>

#include "spinpst/network.hpp"

namespace spinpst {

/// Parse a network document: a JSON object with fields
///   vertices       integer            (required)
///   edges          list of [i, j, J]  (required)
///   reference      integer            (optional, default 1)
///   scale          real               (optional, default 1.0)
///   adjacency_mode boolean            (optional, default false)
/// Errors name the offending field.
SpinNetwork parse_network_document(const std::string& text);

/// parse_network_document over a file's contents.
SpinNetwork load_network_document(const std::filesystem::path& path);

/// Serialize a network so that parsing the result reproduces it exactly.
std::string write_network_document(const SpinNetwork& net);

}  // namespace spinpst
