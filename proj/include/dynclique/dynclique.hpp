#pragma once

#include "dynclique/errors.hpp"
#include "dynclique/graph.hpp"
#include "dynclique/ttt.hpp"
#include "dynclique/signature.hpp"
#include "dynclique/delta.hpp"
#include "dynclique/random.hpp"
#include "dynclique/oracle.hpp"
#include "dynclique/extremal.hpp"
#include "dynclique/stream.hpp"
#include "dynclique/verify.hpp"
