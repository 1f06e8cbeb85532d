#pragma once

#include "thompson/cantor.hpp"
#include "thompson/dyadic.hpp"
#include "thompson/plmap.hpp"
#include "thompson/relators.hpp"
#include "thompson/report.hpp"
#include "thompson/schreier.hpp"
#include "thompson/stabgen.hpp"
#include "thompson/word.hpp"
