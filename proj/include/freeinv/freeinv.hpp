#pragma once

#include "freeinv/basis.hpp"
#include "freeinv/counting.hpp"
#include "freeinv/evaluator.hpp"
#include "freeinv/freepoly.hpp"
#include "freeinv/group.hpp"
#include "freeinv/io.hpp"
#include "freeinv/linalg.hpp"
#include "freeinv/random.hpp"
#include "freeinv/rewriter.hpp"
#include "freeinv/word.hpp"
