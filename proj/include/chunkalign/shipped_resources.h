#ifndef CHUNKALIGN_SHIPPED_RESOURCES_H_
#define CHUNKALIGN_SHIPPED_RESOURCES_H_

#include <string_view>

// Text of the resource files under rules/ and data/, embedded at build time.
namespace chunkalign::shipped {

std::string_view english_rules();
std::string_view hindi_rules();
std::string_view hindi_transliteration();

}  // namespace chunkalign::shipped

#endif  // CHUNKALIGN_SHIPPED_RESOURCES_H_
