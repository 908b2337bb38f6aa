#ifndef NAMELINK_NAMELINK_HPP
#define NAMELINK_NAMELINK_HPP

#include "namelink/error.hpp"
#include "namelink/evaluation.hpp"
#include "namelink/lexicons.hpp"
#include "namelink/matcher.hpp"
#include "namelink/pipeline.hpp"
#include "namelink/protagonists.hpp"
#include "namelink/recognizer.hpp"
#include "namelink/similarity.hpp"
#include "namelink/standoff.hpp"
#include "namelink/text_model.hpp"
#include "namelink/unicode.hpp"

#endif  // NAMELINK_NAMELINK_HPP
