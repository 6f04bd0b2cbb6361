#pragma once

// Everything in one include.

#include "strtree/bin_string.hpp"
#include "strtree/counting.hpp"
#include "strtree/error.hpp"
#include "strtree/finite_model.hpp"
#include "strtree/logic/eval_bounded.hpp"
#include "strtree/logic/infix.hpp"
#include "strtree/logic/sexpr.hpp"
#include "strtree/logic/syntax.hpp"
#include "strtree/logic/theories.hpp"
#include "strtree/logic/translate.hpp"
#include "strtree/report.hpp"
#include "strtree/report_json.hpp"
#include "strtree/set_coding.hpp"
#include "strtree/string_recursion.hpp"
#include "strtree/suites.hpp"
#include "strtree/tree_codec.hpp"
