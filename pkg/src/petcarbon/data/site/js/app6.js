// bundle
var v0 = 1036361797;
var v1 = 818175171;
var v2 = 365848262;
var v3 = 135892173;
var v4 = 185007666;
var v5 = 284886268;
var v6 = 899655082;
var v7 = 754751861;
var v8 = 165815519;
var v9 = 904639048;
var v10 = 224866795;
var v11 = 772010794;
var v12 = 853463951;
var v13 = 677566535;
var v14 = 554038657;
var v15 = 151826257;
var v16 = 996523281;
var v17 = 609205964;
var v18 = 190575850;
var v19 = 494698918;
var v20 = 288119144;
var v21 = 332622281;
var v22 = 371974754;
var v23 = 362584791;
var v24 = 195151707;
var v25 = 956871010;
var v26 = 716167634;
var v27 = 93332984;
var v28 = 1017564262;
var v29 = 781651660;
var v30 = 851268024;
var v31 = 255494077;
var v32 = 681460332;
var v33 = 166204014;
var v34 = 803408379;
var v35 = 405126244;
var v36 = 1065683980;
var v37 = 860568456;
var v38 = 768158365;
var v39 = 805214621;
var v40 = 704835143;
var v41 = 363983885;
var v42 = 488218287;
var v43 = 644400996;
var v44 = 984355182;
var v45 = 359563793;
var v46 = 54347670;
var v47 = 854497054;
var v48 = 156819484;
var v49 = 483976131;
var v50 = 898145160;
var v51 = 541774805;
var v52 = 489858838;
var v53 = 889563771;
var v54 = 444765094;
var v55 = 41003621;
var v56 = 372732544;
var v57 = 713756310;
var v58 = 119056983;
var v59 = 27212047;
var v60 = 966679485;
var v61 = 281395157;
var v62 = 552408844;
var v63 = 623510906;
var v64 = 258322501;
var v65 = 315072541;
var v66 = 447416320;
var v67 = 624284446;
var v68 = 198774061;
var v69 = 168029098;
var v70 = 966010804;
var v71 = 539907867;
var v72 = 731454835;
var v73 = 700639825;
var v74 = 660521364;
var v75 = 785770325;
var v76 = 1062101102;
var v77 = 933323117;
var v78 = 81107178;
var v79 = 514522869;
var v80 = 776314758;
var v81 = 817983997;
var v82 = 1053863151;
var v83 = 696667619;
var v84 = 721961475;
var v85 = 203965904;
var v86 = 207222833;
var v87 = 275423363;
var v88 = 431736248;
var v89 = 517773234;
var v90 = 823347663;
var v91 = 196902342;
var v92 = 240420454;
var v93 = 433342080;
var v94 = 83658203;
var v95 = 112183056;
var v96 = 1014834464;
var v97 = 457750779;
var v98 = 279545682;
var v99 = 802158;
var v100 = 799554511;
var v101 = 624456784;
var v102 = 784560222;
var v103 = 1030678738;
var v104 = 407965684;
var v105 = 401577484;
var v106 = 115264574;
var v107 = 464474363;
var v108 = 64754386;
var v109 = 111914460;
var v110 = 948815339;
var v111 = 348710436;
var v112 = 584207561;
var v113 = 777253836;
var v114 = 1025328749;
var v115 = 660758373;
var v116 = 583927120;
var v117 = 518867621;
var v118 = 357321677;
var v119 = 197920780;
var v120 = 704055852;
var v121 = 972950343;
var v122 = 970050279;
var v123 = 888953734;
var v124 = 11735510;
var v125 = 51829504;
var v126 = 1062372848;
var v127 = 20764922;
var v128 = 320356455;
var v129 = 585048392;
var v130 = 1000126053;
var v131 = 1046625823;
var v132 = 1040218846;
var v133 = 260629315;
var v134 = 629181068;
var v135 = 1041979790;
var v136 = 239073072;
var v137 = 1014943461;
var v138 = 768050829;
var v139 = 524574674;
var v140 = 112805645;
var v141 = 291161622;
var v142 = 568830316;
var v143 = 444257131;
var v144 = 1032402793;
var v145 = 815762624;
var v146 = 229103081;
var v147 = 782524668;
var v148 = 121946290;
var v149 = 22923705;
var v150 = 571833087;
var v151 = 440822234;
var v152 = 1027790348;
var v153 = 481948288;
var v154 = 747251533;
var v155 = 206624894;
var v156 = 968760058;
var v157 = 460946912;
var v158 = 464822459;
var v159 = 950145000;
var v160 = 897196145;
var v161 = 203344488;
var v162 = 986266216;
var v163 = 1032999076;
var v164 = 868853389;
var v165 = 665140879;
var v166 = 367527186;
var v167 = 42336997;
var v168 = 910625638;
var v169 = 899599203;
var v170 = 610125197;
var v171 = 487594370;
var v172 = 154760827;
var v173 = 403248433;
var v174 = 536795174;
var v175 = 247501804;
var v176 = 86814228;
var v177 = 917163289;
var v178 = 322656338;
var v179 = 876380018;
var v180 = 213881233;
var v181 = 412825768;
var v182 = 426538550;
var v183 = 1006736779;
var v184 = 737663507;
var v185 = 466594326;
var v186 = 933607680;
var v187 = 21306822;
var v188 = 538371187;
var v189 = 791761780;
var v190 = 144952400;
var v191 = 733268836;
var v192 = 849997558;
var v193 = 188383884;
var v194 = 614804780;
var v195 = 789752691;
var v196 = 564801787;
var v197 = 236143195;
var v198 = 625757096;
var v199 = 12155958;
var v200 = 602096773;
var v201 = 917162864;
var v202 = 477837698;
var v203 = 436570155;
var v204 = 913394747;
var v205 = 388287683;
var v206 = 568465979;
var v207 = 222176987;
var v208 = 464923148;
var v209 = 290386427;
var v210 = 770741502;
var v211 = 777601839;
var v212 = 261955188;
var v213 = 646588036;
var v214 = 990053338;
var v215 = 1067744422;
var v216 = 362066435;
var v217 = 189460381;
var v218 = 143077982;
var v219 = 172453747;
var v220 = 470722975;
var v221 = 28307158;
var v222 = 1025685248;
var v223 = 123272612;
var v224 = 235163396;
var v225 = 551000913;
var v226 = 87411786;
var v227 = 948161766;
var v228 = 154804624;
var v229 = 1000217057;
var v230 = 636571784;
var v231 = 435616314;
var v232 = 758873690;
var v233 = 140990235;
var v234 = 213653119;
var v235 = 1009961129;
var v236 = 558444443;
var v237 = 933110965;
var v238 = 763874811;
var v239 = 8331377;
var v240 = 592687819;
var v241 = 194489205;
var v242 = 168803057;
var v243 = 29065697;
var v244 = 963364876;
var v245 = 475808531;
var v246 = 77550065;
var v247 = 183344958;
var v248 = 427691178;
var v249 = 447786315;
var v250 = 266491110;
var v251 = 432662331;
var v252 = 372932017;
var v253 = 357617202;
var v254 = 963534969;
var v255 = 282274595;
var v256 = 441713002;
var v257 = 507610955;
var v258 = 701087361;
var v259 = 652817718;
var v260 = 846402563;
var v261 = 732714785;
var v262 = 217994086;
var v263 = 612236853;
var v264 = 771387986;
var v265 = 181620086;
var v266 = 923444541;
var v267 = 983501596;
var v268 = 795795388;
var v269 = 224578895;
var v270 = 203842026;
var v271 = 351347427;
var v272 = 915813033;
var v273 = 637406562;
var v274 = 97990273;
var v275 = 120543633;
var v276 = 1025135743;
var v277 = 398215413;
var v278 = 1072630654;
var v279 = 727387121;
var v280 = 309586930;
var v281 = 644021185;
var v282 = 367985231;
var v283 = 537338815;
var v284 = 736978288;
var v285 = 109956935;
var v286 = 260834872;
var v287 = 979215894;
var v288 = 1017647721;
var v289 = 422339177;
var v290 = 883262408;
var v291 = 151417498;
var v292 = 422696906;
var v293 = 934095045;
var v294 = 297074137;
var v295 = 415501632;
var v296 = 504154004;
var v297 = 567151826;
var v298 = 40243040;
var v299 = 655737135;
var v300 = 526788725;
var v301 = 1031385820;
var v302 = 969989737;
var v303 = 599834448;
var v304 = 958889019;
var v305 = 471904955;
var v306 = 599900968;
var v307 = 482440338;
var v308 = 81297639;
var v309 = 441205105;
var v310 = 865433049;
var v311 = 698371455;
var v312 = 271892241;
var v313 = 824760505;
var v314 = 1010549775;
var v315 = 748698740;
var v316 = 110713163;
var v317 = 136026078;
var v318 = 88494141;
var v319 = 635968893;
var v320 = 546179432;
var v321 = 172724239;
var v322 = 217906355;
var v323 = 696623524;
var v324 = 94110391;
var v325 = 449933339;
var v326 = 899700332;
var v327 = 15227214;
var v328 = 368283791;
var v329 = 360830019;
var v330 = 682738455;
var v331 = 172939576;
var v332 = 671741985;
var v333 = 305104545;
var v334 = 657242616;
var v335 = 836105276;
var v336 = 631008482;
var v337 = 348646255;
var v338 = 356053551;
var v339 = 91061803;
var v340 = 651668750;
var v341 = 522546691;
var v342 = 702056821;
var v343 = 1039557038;
var v344 = 49296777;
var v345 = 849278339;
var v346 = 786603390;
var v347 = 717532946;
var v348 = 25182540;
var v349 = 770200894;
var v350 = 146254291;
var v351 = 962991376;
var v352 = 243064050;
var v353 = 739299469;
var v354 = 108748489;
var v355 = 393100993;
var v356 = 815455069;
var v357 = 165973017;
var v358 = 1040744190;
var v359 = 175265540;
var v360 = 534459541;
var v361 = 190593681;
var v362 = 510363431;
var v363 = 710265111;
var v364 = 468700890;
var v365 = 91775698;
var v366 = 525080672;
var v367 = 158280086;
var v368 = 402746015;
var v369 = 741076305;
var v370 = 989899819;
var v371 = 87907043;
var v372 = 648052850;
var v373 = 213856545;
var v374 = 109171140;
var v375 = 241897588;
var v376 = 995198086;
var v377 = 289193560;
var v378 = 212734951;
var v379 = 48351208;
var v380 = 468576331;
var v381 = 293722053;
var v382 = 957125093;
var v383 = 79571870;
