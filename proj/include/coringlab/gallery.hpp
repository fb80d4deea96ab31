#pragma once

#include <string>
#include <vector>

#include "coringlab/model.hpp"

namespace coringlab {

struct GalleryEntry {
    std::string filename;
    std::string text;  // canonical serialization; parsing it back is the identity
};

// The built-in example models, in a fixed order with fixed bytes.
std::vector<GalleryEntry> gallery_entries();

const GalleryEntry* find_gallery_entry(const std::string& filename);

} // namespace coringlab
