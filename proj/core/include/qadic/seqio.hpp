#pragma once

#include <filesystem>
#include <string>

#include "qadic/constructions.hpp"

namespace qadic {

// Sequence file format: optional '#'-prefixed comment lines, then a single
// line of digit characters ('0'/'1' binary, '0'..'3' quaternary), optional
// trailing newline.

std::string digits_string(const QuaternarySequence& s);

void write_sequence_file(const std::filesystem::path& path, const QuaternarySequence& s);
void write_sequence_file(const std::filesystem::path& path, const BinarySequence& s);

QuaternarySequence read_quaternary_file(const std::filesystem::path& path);
BinarySequence read_binary_file(const std::filesystem::path& path);

}  // namespace qadic
