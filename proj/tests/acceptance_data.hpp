#pragma once

// Reference listings: heads and tails of sorted outputs, and exception sets.

#include <cstdint>
#include <vector>

namespace refdata {

using Rows = std::vector<std::vector<std::int64_t>>;
using List = std::vector<std::int64_t>;

// (M, r)
inline const Rows radicals_head = {
    {0,1}, {2,2}, {3,1}, {5,4}, {6,2}, {7,3}, {10,6}, {11,3}, {13,180}, {14,4}, {15,1}, {17,8}, {19,39},
    {21,12}, {22,42}, {23,5}, {26,10}, {29,1820}, {30,2}, {31,273}, {33,4}, {34,6}, {35,1}, {37,12},
    {38,6}, {39,4}, {41,320}, {42,2}, {43,531}, {46,3588}, {47,7}, {51,7}, {53,9100}, {55,12}, {57,20},
    {58,2574}, {59,69}, {62,8}, {65,16}, {66,8}, {67,5967}, {69,936}, {70,30}, {71,413}, {74,430}
};
inline const Rows radicals_tail = {{999980000099,1}, {999984000063,1}, {999988000035,1}, {999992000015,1}};
// (D)
inline const Rows discs_head = {
    {0}, {5}, {8}, {12}, {13}, {17}, {21}, {24}, {28}, {29}, {33}, {37}, {40}, {41}, {44}, {53}, {56},
    {57}, {60}, {61}, {65}, {69}, {73}, {76}, {77}, {85}, {88}, {89}, {92}, {93}, {97}, {101}, {104},
    {105}, {113}, {120}, {124}, {129}, {136}, {137}, {140}, {141}, {145}, {149}, {152}, {156}, {161},
    {165}, {168}, {172}, {173}, {177}, {184}, {185}, {188}, {197}, {201}, {204}, {205}, {209}, {213},
    {220}, {221}, {229}
};
inline const Rows discs_tail = {{3999960000104}, {3999968000060}, {3999976000040}, {3999992000008}};
// (M, n)
inline const Rows verify_s1_head = {
    {2,2}, {3,1}, {5,2}, {6,1}, {7,1}, {10,2}, {11,1}, {13,2}, {14,1}, {15,1}, {17,2}, {19,1}, {21,1},
    {22,1}, {23,1}, {26,2}, {29,2}, {30,1}, {31,1}, {33,1}, {34,1}, {35,1}, {37,2}, {38,1}, {39,1},
    {41,2}, {42,1}, {43,1}, {46,1}, {47,1}, {51,1}, {53,2}, {55,1}, {57,1}, {58,2}, {59,1}, {61,2},
    {62,1}, {65,2}, {66,1}, {67,1}, {69,1}, {70,1}, {71,1}, {74,2}, {77,1}, {78,1}, {79,1}, {82,2}
};
inline const Rows verify_s1_tail = {{999982000077,1}, {999986000045,1}, {999990000021,1}, {999997999997,1}};
// (M, n)
inline const Rows verify_sm1_head = {
    {2,1}, {5,1}, {10,1}, {13,1}, {17,1}, {26,1}, {29,1}, {37,1}, {41,1}, {53,1}, {58,1}, {61,1}, {65,1},
    {73,1}, {74,1}, {82,1}, {85,1}, {89,1}, {97,1}, {101,1}, {106,1}, {109,1}, {113,1}, {122,1}, {130,1},
    {137,1}, {145,1}, {149,1}, {157,1}, {170,1}, {173,1}, {181,1}, {185,1}, {197,1}, {202,1}, {218,1},
    {226,1}, {229,1}, {233,1}, {257,1}, {265,1}, {269,1}, {274,1}
};
inline const Rows verify_sm1_tail = {{999986000053,1}, {999990000029,1}, {999994000013,1}, {999998000005,1}};
// (M, n)
inline const Rows square_trace_head = {
    {7,1}, {51,1}, {69,1}, {77,1}, {187,1}, {287,1}, {323,1}, {723,1}, {1023,1}, {1067,1}, {1077,1},
    {2397,1}, {3053,1}, {3173,1}, {5183,1}, {6347,1}, {6557,1}, {9799,1}, {14189,1}, {14637,1}, {15117,1},
    {16383,1}, {26243,1}, {29127,1}, {31093,1}, {39999,1}, {43637,1}, {47103,1}, {47213,1}, {50621,1},
    {71111,1}, {71283,1}, {83517,1}, {99763,1}, {102613,1}, {114243,1}
};
inline const Rows square_trace_tail = {
    {9956072546774637,1}, {9964048570846557,1}, {9988005398920077,1}, {9996000599959997,1}
};
// (M, T, n)
inline const Rows prime_trace_head = {
    {5,11,5}, {29,5,1}, {53,7,1}, {149,61,1}, {173,13,1}, {293,17,1}, {317,89,1}, {365,19,1}, {533,23,1},
    {773,139,1}, {797,367,1}, {821,16189,1}, {965,31,1}, {1373,37,1}, {1493,2357,1}, {1685,41,1},
    {1781,211,1}, {1853,43,1}, {1997,9161,1}, {2213,47,1}, {2285,239,1}, {2309,17539,1}, {2477,647,1},
    {2813,53,1}, {3485,59,1}, {3533,2437,1}, {3653,1511,1}
};
inline const Rows prime_trace_tail = {{10965650093,104717,1}, {10966906733,104723,1}, {10968163445,104729,1}};
// (M)
inline const Rows units_sm1_head = {
    {2}, {5}, {10}, {13}, {17}, {26}, {29}, {37}, {41}, {53}, {58}, {61}, {65}, {73}, {74}, {82}, {85},
    {89}, {97}, {101}, {106}, {109}, {113}, {122}, {130}, {137}, {145}, {149}, {157}, {170}, {173}, {181},
    {185}, {193}, {197}, {202}, {218}, {226}, {229}, {233}, {257}, {265}, {269}, {274}, {277}, {281},
    {290}, {293}, {298}, {314}, {317}, {346}, {349}, {353}, {362}, {365}, {370}, {373}, {389}
};
inline const Rows units_sm1_tail = {{99999860000053}, {99999900000029}, {99999940000013}, {99999980000005}};
// (M)
inline const Rows units_s1_head = {
    {2}, {3}, {5}, {6}, {7}, {10}, {11}, {13}, {14}, {15}, {17}, {19}, {21}, {22}, {23}, {26}, {29}, {30},
    {31}, {33}, {34}, {35}, {37}, {38}, {39}, {41}, {42}, {43}, {46}, {47}, {51}, {53}, {55}, {57}, {58},
    {59}, {61}, {62}, {65}, {66}, {67}, {69}, {70}, {71}, {73}, {74}, {77}, {78}, {79}, {82}, {83}, {85},
    {86}, {87}, {89}, {91}, {93}, {94}, {95}, {101}, {102}, {103}, {105}, {107}, {109}, {110}, {111}
};
inline const Rows units_s1_tail = {{99999820000077}, {99999860000045}, {99999900000021}, {99999979999997}};
// (M, t)
inline const Rows norm_1_2_head = {
    {-7,1}, {-1,2}, {1,3}, {2,4}, {7,6}, {14,8}, {17,5}, {23,10}, {31,78}, {34,12}, {41,7}, {46,312},
    {47,14}, {62,16}, {71,118}, {73,9}, {79,18}, {89,217}, {94,2928}, {97,69}, {103,954}, {113,11},
    {119,22}, {127,4350}, {137,199}, {142,24}, {151,83142}, {158,176}, {161,13}, {167,26}, {191,5998},
    {193,56445}, {194,28}, {199,255078}, {206,488}, {217,15}, {223,30}, {233,6121}, {238,216}
};
inline const Rows norm_1_2_tail = {
    {999986000041,999993}, {999990000017,999995}, {999994000001,999997}, {999997999993,999999}
};
// (M, t)
inline const Rows norm_m1_3_head = {
    {1,2}, {3,6}, {7,4}, {13,1}, {19,8}, {21,3}, {31,22}, {37,5}, {39,12}, {43,26}, {57,30}, {61,7},
    {67,16}, {73,34}, {91,38}, {93,9}, {97,1694}, {103,20}, {109,73}, {111,42}, {127,586}, {129,318},
    {133,11}, {139,448}, {151,172}, {157,50}, {163,1864}, {181,13}, {183,54}, {193,379486}, {199,28},
    {201,1758}, {211,58}, {217,766}, {237,15}, {241,62}, {247,220}, {259,32}, {271,428}
};
inline const Rows norm_m1_3_tail = {
    {999986000061,999993}, {999990000037,999995}, {999994000021,999997}, {999998000013,999999}
};
// (M, t)
inline const Rows norm_1_15_head = {
    {-59,1}, {-51,3}, {-35,5}, {-14,2}, {-11,4}, {-6,6}, {1,8}, {10,10}, {21,9}, {34,14}, {61,11},
    {66,18}, {85,20}, {106,22}, {109,13}, {129,24}, {154,26}, {165,15}, {181,28}, {201,312}, {210,30},
    {229,17}, {241,32}, {265,1400}, {274,34}, {301,19}, {309,36}, {346,38}, {349,131}, {354,414},
    {381,21}, {385,40}, {394,278}, {409,41216}, {421,3919}
};
inline const Rows norm_1_15_tail = {
    {999982000021,999991}, {999985999989,999993}, {999993999949,999997}, {999997999941,999999}
};
// (M, t)
inline const Rows norm_m1_15_head = {
    {1,2}, {6,6}, {10,10}, {15,30}, {19,4}, {31,8}, {34,22}, {46,26}, {51,12}, {61,1}, {69,3}, {79,16},
    {85,5}, {94,38}, {106,82}, {109,7}, {114,42}, {115,20}, {139,94}, {141,9}, {151,98}, {159,24},
    {166,206}, {181,11}, {186,54}, {190,110}, {199,536}, {211,28}, {214,58}, {229,13}, {241,52658},
    {249,126}, {265,130}, {271,32}, {274,1258}, {285,15}, {310,70}, {331,7714}, {334,146}, {339,36}
};
inline const Rows norm_m1_15_tail = {
    {999986000109,999993}, {999990000085,999995}, {999994000069,999997}, {999998000061,999999}
};
// (M, t)
inline const Rows norm_m1_225_head = {
    {1,16}, {2,30}, {5,15}, {10,10}, {13,20}, {17,120}, {26,6}, {29,12}, {34,18}, {37,5}, {41,24},
    {53,105}, {58,70}, {61,25}, {65,240}, {73,80}, {74,42}, {82,270}, {85,35}, {89,48}, {97,1280},
    {101,3}, {106,54}, {109,9}, {113,23280}, {122,330}, {130,110}, {137,52320}, {145,360}, {146,66},
    {149,21}, {157,55}, {170,390}, {173,195}, {178,130}, {181,27}, {185,2040}
};
inline const Rows norm_m1_225_tail = {
    {999966001189,999983}, {999978001021,999989}, {999982000981,999991}, {999994000909,999997}
};
// (M, t)
inline const Rows norm_m1_1009_head = {
    {2,14}, {5,13}, {10,102}, {29,100}, {37,21}, {41,8}, {58,42}, {74,58}, {101,305}, {109,1617},
    {113,656}, {137,2504}, {157,108}, {173,17}, {185,1168}, {197,259}, {202,35958}, {205,33}, {209,4192},
    {218,854}, {241,380808}, {253,681}, {269,620}, {290,158}, {313,384}, {314,2090}, {317,1316},
    {337,6792}, {341,67}, {353,16496}, {370,1422}, {394,86742}
};
inline const Rows norm_m1_1009_tail = {
    {999986004085,999993}, {999990004061,999995}, {999994004045,999997}, {999998004037,999999}
};
// (M, t)
inline const Rows norm_1_210_head = {
    {-839,1}, {-831,3}, {-815,5}, {-791,7}, {-759,9}, {-719,11}, {-671,13}, {-615,15}, {-551,17},
    {-479,19}, {-399,21}, {-311,23}, {-215,25}, {-209,2}, {-206,4}, {-201,6}, {-194,8}, {-185,10},
    {-174,12}, {-161,14}, {-146,16}, {-129,18}, {-111,27}, {-110,20}, {-89,22}, {-66,24}, {-41,26},
    {-14,28}, {1,29}, {15,30}, {46,32}, {79,34}, {114,36}, {151,38}, {190,40}, {226,332}, {231,42},
    {249,33}, {274,44}, {319,46}, {366,48}, {385,35}, {415,50}, {466,52}, {511,2758}, {519,54}, {526,872},
    {574,56}, {609,273}, {610,4100}, {631,58}, {679,574}, {681,39}, {690,60}, {721,511}, {751,62},
    {814,64}, {834,636}, {865,1265}, {879,66}, {919,2486}, {946,68}, {991,30158}, {1009,43}
};
inline const Rows norm_1_210_tail = {
    {999985999209,999993}, {999989999185,999995}, {999993999169,999997}, {999997999161,999999}
};
// (M)
inline const Rows nonrational_head = {
    {58}, {74}, {106}, {113}, {137}, {359}, {386}, {401}, {410}, {494}, {515}, {610}, {674}, {743}, {806},
    {842}, {877}, {1009}, {1010}, {1157}, {1367}, {1430}, {1901}, {1934}, {2006}, {2153}, {2255}, {2522},
    {2678}, {2822}, {2986}, {3014}, {5266}, {5513}, {6626}, {6707}, {6722}, {6890}, {7310}, {7610},
    {7858}, {7919}, {8101}, {8465}, {8555}, {8738}, {8761}, {9410}, {9634}, {9998}, {11183}, {11195},
    {11237}, {11447}, {11509}, {11537}, {11663}, {11890}, {11965}, {13427}, {13645}, {14795}, {16895},
    {16913}, {17266}, {18530}, {19223}, {19826}, {20066}, {20735}, {21023}, {21317}, {21389}, {22730},
    {23066}, {23102}, {23410}, {23626}, {23783}, {23963}
};
inline const Rows nonrational_tail = {
    {248061933000323}, {248063067000323}, {248063350500730}, {248063634001297}
};
// (M, number of cyclic 3-factors, v3(h), n)
inline const Rows cubic_head = {
    {2,0,0,15}, {5,0,0,9}, {10,0,0,3}, {13,0,0,3}, {17,0,0,3}, {26,0,0,3}, {29,1,1,5}, {37,0,0,3},
    {41,0,0,3}, {53,0,0,3}, {58,1,1,1}, {61,0,0,3}, {65,0,0,3}, {74,1,1,1}, {82,1,1,1}, {85,1,1,1},
    {101,0,0,3}, {106,1,1,1}, {109,1,1,1}, {113,1,1,1}, {122,1,1,1}, {137,1,1,1}, {145,0,0,3},
    {149,0,0,3}, {170,0,0,3}, {173,1,2,1}, {181,1,1,1}, {197,0,0,3}, {202,1,1,1}, {226,0,0,3},
    {229,1,1,3}, {257,1,1,1}, {290,0,0,3}, {293,0,0,3}, {314,1,1,1}, {317,0,0,3}, {353,1,1,1},
    {362,0,0,3}, {365,0,0,3}, {397,1,1,1}, {401,1,1,1}, {442,0,0,3}, {445,0,0,3}, {461,1,2,1},
    {485,0,0,3}, {530,0,0,3}, {533,1,2,1}, {577,0,0,3}, {610,1,1,1}, {626,1,1,1}, {629,0,0,3},
    {653,1,1,1}, {677,0,0,3}, {730,1,1,1}, {733,1,2,1}, {754,1,1,1}, {773,1,1,1}, {785,1,1,3},
    {842,1,1,1}, {877,1,1,1}, {901,0,0,3}, {962,0,0,3}, {965,1,2,1}, {997,1,1,1}, {1009,1,1,1}
};
inline const Rows cubic_tail = {
    {809976600173,1,3,1}, {809983800085,1,4,1}, {809991000029,1,3,1}, {810009000029,1,2,1}
};
// (M, n) with trivial 3-class group
inline const Rows cubic_trivial = {
    {2,15}, {5,9}, {10,3}, {13,3}, {17,3}, {26,3}, {37,3}, {41,3}, {53,3}, {61,3}, {65,3}, {101,3},
    {145,3}, {149,3}, {170,3}, {197,3}, {226,3}, {290,3}, {293,3}, {317,3}, {362,3}, {365,3}, {442,3},
    {445,3}, {485,3}, {530,3}, {577,3}, {629,3}, {677,3}, {901,3}, {962,3}, {1093,3}, {1226,3}, {1370,3},
    {1601,3}, {1853,3}, {2117,3}, {2305,3}, {2605,3}, {2813,3}, {3029,3}, {3253,3}, {4229,3}, {5045,3},
    {6245,3}, {6893,3}, {8653,3}
};
// p-rational exceptions
inline const List rational_a_p3 = {
    2, 3, 5, 7, 10, 11, 13, 14, 21, 23, 34, 35, 37, 38, 53, 55, 61, 110, 115, 143, 145, 146, 205, 215,
    221, 226, 227, 230, 437, 439, 442, 445, 577, 890, 902, 905, 910, 1085, 1087, 1093, 1517, 1762, 1766,
    2605, 3595, 3605, 5605, 5615, 5645, 11005
};
inline const List rational_a_p5 = {2, 3, 5, 6, 21, 23, 26, 29, 102, 213, 219, 231, 237};
inline const List rational_a_p7 = {};
inline const List rational_b_p3 = {
    2, 5, 10, 13, 14, 35, 37, 61, 110, 143, 145, 221, 226, 437, 442, 445, 1085, 1093, 1517
};
inline const List rational_b_p5 = {6, 21, 26, 29};
inline const List rational_b_p7 = {};
inline const List q100_m1_head = {
    89, 509, 626, 629, 761, 2501, 3554, 5626, 5629, 10001, 15626, 15629, 22501, 30626, 30629, 40001,
    50626, 50629, 62501, 75626, 75629, 90001, 105626, 105629
};
inline const List q100_m1_tail = {5175629, 5405629, 5640629, 5880629, 6125629};
inline const List q100_p1_head = {
    39, 51, 69, 114, 326, 434, 574, 674, 791, 1086, 1111, 1406, 1761, 1914, 3981, 4171, 5621, 8789, 10421,
    11289, 13611, 14189, 15621, 18906, 20069, 20501, 22499
};
inline const List q100_p1_tail = {4730621, 5405621, 5640621, 5880621, 6125621};
inline const List q500_m1_head = {
    29, 89, 509, 626, 629, 761, 2501, 3554, 5626, 5629, 10001, 15626, 15629, 19109, 22061, 22501, 30626,
    30629, 40001, 42341, 50626, 50629, 62501, 70429, 75626, 75629, 82234, 90001, 105626, 105629, 122501,
    140626, 140629
};
inline const List q500_m1_tail = {
    147015629, 148230629, 149450629, 150675629, 151905629, 153140629, 154380629, 155625629
};
inline const List q500_p1_head = {
    21, 39, 51, 69, 114, 326, 434, 514, 574, 581, 674, 791, 874, 1086, 1111, 1191, 1351, 1406, 1641, 1761,
    1851, 1914, 2399, 2599, 3251, 3981, 4171, 5474, 5621, 5774, 8294, 8789, 10421, 11289, 13611, 14189,
    15621
};
inline const List q500_p1_tail = {
    141015621, 142205621, 143400621, 144600621, 145805621, 149450621, 150675621, 151905621, 153140621,
    155625621
};

}  // namespace refdata
