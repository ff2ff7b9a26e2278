// bundle
var v0 = 837979681;
var v1 = 640541574;
var v2 = 1016711074;
var v3 = 954524432;
var v4 = 132776762;
var v5 = 930486537;
var v6 = 303685571;
var v7 = 149504676;
var v8 = 147821500;
var v9 = 835036885;
var v10 = 297988310;
var v11 = 406523882;
var v12 = 735340731;
var v13 = 671497479;
var v14 = 760024007;
var v15 = 366430532;
var v16 = 172447349;
var v17 = 283363288;
var v18 = 838736398;
var v19 = 522587839;
var v20 = 939032375;
var v21 = 357409062;
var v22 = 316624786;
var v23 = 371549834;
var v24 = 439212218;
var v25 = 775290934;
var v26 = 805803513;
var v27 = 566842206;
var v28 = 293346408;
var v29 = 320741559;
var v30 = 929349421;
var v31 = 676564974;
var v32 = 186661547;
var v33 = 804784929;
var v34 = 935755887;
var v35 = 770627932;
var v36 = 648661153;
var v37 = 449183589;
var v38 = 404363362;
var v39 = 656753379;
var v40 = 566120373;
var v41 = 385562524;
var v42 = 4191429;
var v43 = 165817864;
var v44 = 530491971;
var v45 = 575886841;
var v46 = 863733469;
var v47 = 725842164;
var v48 = 142848935;
var v49 = 300648568;
var v50 = 912963782;
var v51 = 199581191;
var v52 = 1056535522;
var v53 = 889869934;
var v54 = 122711050;
var v55 = 328346999;
var v56 = 410632999;
var v57 = 776610180;
var v58 = 15619674;
var v59 = 543816741;
var v60 = 932094744;
var v61 = 38954421;
var v62 = 681376063;
var v63 = 496552370;
var v64 = 169594043;
var v65 = 98828349;
var v66 = 198208932;
var v67 = 216220288;
var v68 = 818718181;
var v69 = 71799059;
var v70 = 188824372;
var v71 = 818734243;
var v72 = 332705142;
var v73 = 924894677;
var v74 = 441277155;
var v75 = 988884464;
var v76 = 943615935;
var v77 = 572469386;
var v78 = 918546042;
var v79 = 1001850322;
var v80 = 958151755;
var v81 = 744621616;
var v82 = 1066325396;
var v83 = 576372814;
var v84 = 596273579;
var v85 = 958077610;
var v86 = 719938419;
var v87 = 967297779;
var v88 = 129830547;
var v89 = 342431462;
var v90 = 649173680;
var v91 = 69690355;
var v92 = 316770691;
var v93 = 812329915;
var v94 = 321499839;
var v95 = 755814128;
var v96 = 242826389;
var v97 = 804372678;
var v98 = 657485464;
var v99 = 895358021;
var v100 = 1039407973;
var v101 = 749831291;
var v102 = 450610954;
var v103 = 960323477;
var v104 = 137792544;
var v105 = 185731401;
var v106 = 482709551;
var v107 = 156065288;
var v108 = 426327351;
var v109 = 594193228;
var v110 = 136293306;
var v111 = 712922336;
var v112 = 614414243;
var v113 = 583824704;
var v114 = 221451694;
var v115 = 369289272;
var v116 = 272894201;
var v117 = 471693343;
var v118 = 1036323794;
var v119 = 940630185;
var v120 = 473091802;
var v121 = 883951348;
var v122 = 664867549;
var v123 = 984776503;
var v124 = 710760172;
var v125 = 698383620;
var v126 = 1054012313;
var v127 = 819375611;
var v128 = 538853216;
var v129 = 913570741;
var v130 = 796563174;
var v131 = 400105247;
var v132 = 906612900;
var v133 = 986906073;
var v134 = 993256996;
var v135 = 831862777;
var v136 = 940407728;
var v137 = 461693410;
var v138 = 598950871;
var v139 = 941152139;
var v140 = 654095854;
var v141 = 161446582;
var v142 = 700024275;
var v143 = 178479254;
var v144 = 758829155;
var v145 = 677647916;
var v146 = 118914034;
var v147 = 558419522;
var v148 = 28930118;
var v149 = 571030080;
var v150 = 852972404;
var v151 = 820760775;
var v152 = 72599767;
var v153 = 525126388;
var v154 = 424889682;
var v155 = 962678943;
var v156 = 347843626;
var v157 = 642828894;
var v158 = 661312780;
var v159 = 925385781;
var v160 = 494803333;
var v161 = 787507185;
var v162 = 680268327;
var v163 = 690916458;
var v164 = 915249349;
var v165 = 361692951;
var v166 = 447855145;
var v167 = 966687480;
var v168 = 967575381;
var v169 = 218512169;
var v170 = 401430227;
var v171 = 519766213;
var v172 = 223651141;
var v173 = 295927629;
var v174 = 897111218;
var v175 = 240569649;
var v176 = 922574860;
var v177 = 635288831;
var v178 = 763881276;
var v179 = 954763945;
var v180 = 895314484;
var v181 = 805058692;
var v182 = 221069274;
var v183 = 715213104;
var v184 = 79545499;
var v185 = 98038897;
var v186 = 232944027;
var v187 = 648284924;
var v188 = 245707553;
var v189 = 697046152;
var v190 = 856803822;
var v191 = 227563961;
var v192 = 514915791;
var v193 = 836682280;
var v194 = 167861587;
var v195 = 698468164;
var v196 = 872051054;
var v197 = 730168102;
var v198 = 354173246;
var v199 = 918431011;
var v200 = 500621285;
var v201 = 673371959;
var v202 = 944961703;
var v203 = 230387966;
var v204 = 1057135039;
var v205 = 169936859;
var v206 = 1068493307;
var v207 = 1015177495;
var v208 = 8336651;
var v209 = 785671584;
var v210 = 1021492070;
var v211 = 990303530;
var v212 = 482378205;
var v213 = 254834970;
var v214 = 163516406;
var v215 = 716621018;
var v216 = 271429116;
var v217 = 819768677;
var v218 = 700543473;
var v219 = 299960732;
var v220 = 205917630;
var v221 = 275087641;
var v222 = 313745247;
var v223 = 588358373;
var v224 = 379464086;
var v225 = 470528540;
var v226 = 70791838;
var v227 = 759802499;
var v228 = 999350789;
var v229 = 408641513;
var v230 = 523797983;
var v231 = 663686533;
var v232 = 305576947;
var v233 = 39663678;
var v234 = 640283964;
var v235 = 447086807;
var v236 = 638883391;
var v237 = 1045149649;
var v238 = 400720866;
var v239 = 1040469361;
var v240 = 202713986;
var v241 = 848429522;
var v242 = 580839857;
var v243 = 731449697;
var v244 = 963803918;
var v245 = 83315776;
var v246 = 115646563;
var v247 = 962889774;
var v248 = 304961009;
var v249 = 948550932;
var v250 = 226782857;
var v251 = 1057399362;
var v252 = 162668290;
var v253 = 293018097;
var v254 = 996978900;
var v255 = 106846944;
var v256 = 1045496917;
var v257 = 402138699;
var v258 = 955060847;
var v259 = 1025277482;
var v260 = 454226574;
var v261 = 675850523;
var v262 = 499911068;
var v263 = 980606648;
var v264 = 759025297;
var v265 = 483095430;
var v266 = 576207793;
var v267 = 739081129;
var v268 = 292951646;
var v269 = 273379374;
var v270 = 836339435;
var v271 = 268188007;
var v272 = 174122116;
var v273 = 360683371;
var v274 = 865072507;
var v275 = 400616004;
var v276 = 748446532;
var v277 = 781264550;
var v278 = 80094255;
var v279 = 749606878;
var v280 = 78742546;
var v281 = 741425786;
var v282 = 24401436;
var v283 = 182949268;
var v284 = 197138233;
var v285 = 721631298;
var v286 = 115195980;
var v287 = 331635321;
var v288 = 44456451;
var v289 = 1014907552;
var v290 = 666768660;
var v291 = 736276560;
var v292 = 320633111;
var v293 = 727514069;
var v294 = 793418317;
var v295 = 973791554;
var v296 = 498269955;
var v297 = 1056285188;
var v298 = 621495899;
var v299 = 965793667;
var v300 = 865034028;
var v301 = 672643214;
var v302 = 963404008;
var v303 = 256713533;
var v304 = 344750376;
var v305 = 985333643;
var v306 = 461469307;
var v307 = 25505684;
var v308 = 210205831;
var v309 = 480077480;
var v310 = 398239536;
var v311 = 213593195;
var v312 = 880408186;
var v313 = 970305822;
var v314 = 667719892;
var v315 = 442000261;
var v316 = 458588934;
var v317 = 258251551;
var v318 = 94789439;
var v319 = 190735262;
var v320 = 660987121;
var v321 = 274965958;
var v322 = 865330600;
var v323 = 336419519;
var v324 = 501671150;
var v325 = 408227017;
var v326 = 548709201;
var v327 = 712491320;
var v328 = 998999884;
var v329 = 418348056;
var v330 = 300617118;
var v331 = 906038508;
var v332 = 1005050005;
var v333 = 746526159;
var v334 = 916981176;
var v335 = 760503459;
var v336 = 315698703;
var v337 = 982447567;
var v338 = 875027340;
var v339 = 342713194;
var v340 = 804774330;
var v341 = 605439112;
var v342 = 770772493;
var v343 = 902460728;
var v344 = 300749248;
var v345 = 544701355;
var v346 = 410970166;
var v347 = 346345184;
var v348 = 994800316;
var v349 = 107973719;
var v350 = 677024189;
var v351 = 474951146;
var v352 = 386166584;
var v353 = 1003764672;
var v354 = 64026749;
var v355 = 609441544;
var v356 = 335747887;
var v357 = 218894837;
var v358 = 258822585;
var v359 = 113905832;
var v360 = 595152498;
var v361 = 587719066;
var v362 = 941545528;
var v363 = 388143033;
var v364 = 556174388;
var v365 = 859941235;
var v366 = 322475582;
var v367 = 408825044;
var v368 = 300136079;
var v369 = 1059722671;
var v370 = 445195091;
var v371 = 370383807;
var v372 = 1049602095;
var v373 = 623539379;
var v374 = 817029945;
var v375 = 585624060;
var v376 = 283427478;
var v377 = 872343930;
var v378 = 573244336;
var v379 = 512853749;
var v380 = 385637378;
var v381 = 604049070;
var v382 = 138215032;
var v383 = 868099156;
var v384 = 156551075;
var v385 = 24201485;
var v386 = 866100195;
var v387 = 640803467;
var v388 = 517558607;
var v389 = 588852368;
var v390 = 116966874;
var v391 = 902743729;
var v392 = 374618439;
var v393 = 863745151;
var v394 = 831617497;
var v395 = 391585163;
var v396 = 789586047;
var v397 = 506646236;
var v398 = 1046499771;
var v399 = 597094552;
var v400 = 346061780;
var v401 = 601009534;
var v402 = 860460474;
var v403 = 1021003105;
var v404 = 990063061;
var v405 = 1051432233;
var v406 = 631914550;
var v407 = 242938502;
var v408 = 416429684;
var v409 = 1056100365;
var v410 = 762170764;
var v411 = 831518679;
var v412 = 189110965;
var v413 = 739915417;
var v414 = 515869254;
var v415 = 593073910;
var v416 = 671121788;
var v417 = 583341231;
var v418 = 327385865;
var v419 = 683780258;
var v420 = 573413359;
var v421 = 730318814;
var v422 = 256473957;
var v423 = 291773066;
var v424 = 284426255;
var v425 = 594995169;
var v426 = 120075955;
var v427 = 836599256;
var v428 = 825157439;
var v429 = 225078922;
var v430 = 905396921;
var v431 = 273348783;
var v432 = 880957070;
var v433 = 870691444;
var v434 = 335625482;
var v435 = 999129901;
var v436 = 566395515;
var v437 = 110090666;
var v438 = 571598925;
var v439 = 815070229;
var v440 = 633660512;
var v441 = 102233398;
var v442 = 1033556925;
var v443 = 389570160;
var v444 = 389414060;
var v445 = 629453692;
var v446 = 656500780;
var v447 = 881985161;
var v448 = 625169570;
var v449 = 1068060890;
var v450 = 8520067;
var v451 = 994078865;
var v452 = 1025507436;
var v453 = 1049871246;
var v454 = 392088816;
var v455 = 39012055;
var v456 = 658467670;
var v457 = 239382464;
var v458 = 333517986;
var v459 = 1064684439;
var v460 = 746399601;
var v461 = 322246879;
var v462 = 1043802989;
var v463 = 561724892;
var v464 = 106543993;
var v465 = 39667082;
var v466 = 37367049;
var v467 = 576878333;
var v468 = 399876948;
var v469 = 261603509;
var v470 = 612902601;
var v471 = 829381780;
var v472 = 253620820;
var v473 = 417584133;
var v474 = 636511483;
var v475 = 329539781;
var v476 = 692110427;
var v477 = 41641322;
var v478 = 512885419;
var v479 = 217741079;
var v480 = 447890787;
var v481 = 930756581;
var v482 = 631763900;
var v483 = 373992872;
var v484 = 564344477;
var v485 = 493137847;
var v486 = 284696205;
var v487 = 419597205;
var v488 = 246007349;
var v489 = 442847249;
var v490 = 859414050;
var v491 = 158750417;
var v492 = 290657286;
var v493 = 248772440;
var v494 = 404055045;
var v495 = 187598217;
var v496 = 488095888;
var v497 = 982197707;
var v498 = 785577485;
var v499 = 280232319;
var v500 = 804807509;
var v501 = 782729674;
var v502 = 462646901;
var v503 = 422464328;
var v504 = 652226837;
var v505 = 531876891;
var v506 = 463282121;
var v507 = 486219204;
var v508 = 428008369;
var v509 = 391940114;
var v510 = 326792010;
var v511 = 151188190;
var v512 = 356131330;
var v513 = 718852204;
var v514 = 129323280;
var v515 = 496788994;
var v516 = 111757097;
var v517 = 698125279;
var v518 = 627706133;
var v519 = 414676621;
var v520 = 577816919;
var v521 = 852790268;
var v522 = 495578439;
var v523 = 44190426;
var v524 = 68331390;
var v525 = 819315478;
var v526 = 918327343;
var v527 = 751007527;
var v528 = 788739450;
var v529 = 1019502403;
var v530 = 758594323;
var v531 = 647690757;
var v532 = 336616611;
var v533 = 607649454;
var v534 = 842252709;
var v535 = 26234519;
var v536 = 705160252;
var v537 = 53599916;
var v538 = 861868789;
var v539 = 992045566;
var v540 = 1028860354;
var v541 = 69934534;
var v542 = 320035022;
var v543 = 2849763;
var v544 = 322823463;
var v545 = 812103094;
var v546 = 592805192;
var v547 = 863482629;
var v548 = 760478122;
var v549 = 771310881;
var v550 = 398488092;
var v551 = 736882255;
var v552 = 465600311;
var v553 = 752644092;
var v554 = 686411267;
var v555 = 443035065;
var v556 = 70763709;
var v557 = 826595428;
var v558 = 84752651;
var v559 = 82318008;
var v560 = 820030454;
var v561 = 381567533;
var v562 = 658463537;
var v563 = 51707204;
var v564 = 65040406;
var v565 = 214682909;
var v566 = 527026310;
var v567 = 291761963;
var v568 = 1069883013;
var v569 = 282889101;
var v570 = 242281514;
var v571 = 353348011;
var v572 = 907354986;
var v573 = 766869841;
var v574 = 18354792;
var v575 = 296533361;
var v576 = 455476464;
var v577 = 173923947;
var v578 = 981648024;
var v579 = 9319132;
var v580 = 236481740;
var v581 = 304519523;
var v582 = 1055249734;
var v583 = 257286371;
var v584 = 744543260;
var v585 = 954321299;
var v586 = 224010487;
var v587 = 528195005;
var v588 = 773142241;
var v589 = 311958663;
var v590 = 86396591;
var v591 = 811203270;
var v592 = 113245562;
var v593 = 669006279;
var v594 = 655018506;
var v595 = 247955986;
var v596 = 1021073056;
var v597 = 1047594370;
var v598 = 631909753;
var v599 = 595859301;
var v600 = 681188347;
var v601 = 177163656;
var v602 = 4201205;
var v603 = 973469813;
var v604 = 490849481;
var v605 = 103442723;
var v606 = 7321290;
var v607 = 802696002;
var v608 = 640606964;
var v609 = 392354461;
var v610 = 990184867;
var v611 = 370819410;
var v612 = 179929515;
var v613 = 142801139;
var v614 = 199808483;
var v615 = 945231411;
var v616 = 875574145;
var v617 = 631198973;
var v618 = 351313494;
var v619 = 959698990;
var v620 = 265602504;
var v621 = 855160289;
var v622 = 776781538;
var v623 = 978333441;
var v624 = 240382607;
var v625 = 208596045;
var v626 = 175338025;
var v627 = 797614893;
var v628 = 267666097;
var v629 = 286654010;
var v630 = 408941582;
var v631 = 361632772;
var v632 = 928066996;
var v633 = 229012621;
var v634 = 759439517;
var v635 = 496883083;
var v636 = 974077193;
var v637 = 814170419;
var v638 = 215299339;
var v639 = 68891888;
var v640 = 654814410;
var v641 = 982875445;
var v642 = 388405213;
var v643 = 242864652;
var v644 = 516736001;
var v645 = 828096774;
var v646 = 566205994;
var v647 = 285752826;
var v648 = 207569712;
var v649 = 454325227;
var v650 = 360128289;
var v651 = 363927078;
var v652 = 164247796;
var v653 = 24869591;
var v654 = 217690518;
var v655 = 395239316;
var v656 = 869366849;
var v657 = 506171452;
var v658 = 1050893362;
var v659 = 323090465;
var v660 = 45203486;
var v661 = 240046891;
var v662 = 337548152;
var v663 = 227643847;
var v664 = 973488716;
var v665 = 280529533;
var v666 = 531384469;
var v667 = 611398671;
var v668 = 426133835;
var v669 = 231943699;
var v670 = 553439077;
var v671 = 675406070;
var v672 = 445950313;
var v673 = 934093064;
var v674 = 863162122;
var v675 = 460306879;
var v676 = 421707516;
var v677 = 630077425;
var v678 = 658095202;
var v679 = 68883414;
var v680 = 577496092;
var v681 = 888712770;
var v682 = 664752453;
var v683 = 9310184;
var v684 = 25037418;
var v685 = 1069051435;
var v686 = 52995460;
var v687 = 382095528;
var v688 = 1026973547;
var v689 = 267281523;
var v690 = 886710841;
var v691 = 120232334;
var v692 = 356947144;
var v693 = 412130449;
var v694 = 192739426;
var v695 = 460329965;
var v696 = 504020815;
var v697 = 832950290;
var v698 = 233907430;
var v699 = 751257184;
var v700 = 82135024;
var v701 = 250531259;
var v702 = 567064940;
var v703 = 712011016;
var v704 = 201690051;
var v705 = 219731176;
var v706 = 719054379;
var v707 = 154233467;
var v708 = 251386677;
var v709 = 550298842;
var v710 = 438427861;
var v711 = 99384761;
var v712 = 111158956;
var v713 = 50147229;
var v714 = 299409026;
var v715 = 30869923;
var v716 = 227990769;
var v717 = 521475388;
var v718 = 518979704;
var v719 = 265721568;
var v720 = 995835445;
var v721 = 738400324;
var v722 = 285350992;
var v723 = 655581660;
var v724 = 574694071;
var v725 = 57674214;
var v726 = 791580494;
var v727 = 943177784;
var v728 = 613291126;
var v729 = 523615686;
var v730 = 219010743;
var v731 = 120468392;
var v732 = 828398957;
var v733 = 1007341245;
var v734 = 864826338;
var v735 = 711453356;
var v736 = 852164726;
var v737 = 842158157;
var v738 = 908948496;
var v739 = 498597033;
var v740 = 727165930;
var v741 = 389273760;
var v742 = 887415807;
var v743 = 738111765;
var v744 = 502531201;
var v745 = 931469901;
var v746 = 1048249823;
var v747 = 927618979;
var v748 = 500981497;
var v749 = 443770916;
var v750 = 950354361;
var v751 = 941996212;
var v752 = 759560006;
var v753 = 627187724;
var v754 = 867369735;
var v755 = 752618023;
var v756 = 676183030;
var v757 = 1040957020;
var v758 = 585489779;
var v759 = 627636485;
var v760 = 114818590;
var v761 = 1040821533;
var v762 = 334231608;
var v763 = 1616275;
var v764 = 915891859;
var v765 = 409329418;
var v766 = 365411879;
var v767 = 827793018;
var v768 = 105016343;
var v769 = 313472089;
var v770 = 459876027;
var v771 = 246220646;
var v772 = 955982856;
var v773 = 807275806;
var v774 = 159835846;
var v775 = 603778455;
var v776 = 149533713;
var v777 = 595363594;
var v778 = 172708609;
var v779 = 218615799;
var v780 = 28653229;
var v781 = 806335916;
var v782 = 1024656836;
var v783 = 537716521;
var v784 = 420636059;
var v785 = 228418895;
var v786 = 367090601;
var v787 = 49719860;
var v788 = 846264364;
var v789 = 635221948;
var v790 = 785074852;
var v791 = 612658997;
var v792 = 552922619;
var v793 = 1018052099;
var v794 = 538864095;
var v795 = 831544096;
var v796 = 962849578;
var v797 = 632703798;
var v798 = 562574951;
var v799 = 345289354;
var v800 = 171467181;
var v801 = 601645497;
var v802 = 493750673;
var v803 = 428923936;
var v804 = 839950414;
var v805 = 943172540;
var v806 = 506462299;
var v807 = 335291358;
var v808 = 639746105;
var v809 = 210935221;
var v810 = 231779886;
var v811 = 1008518093;
var v812 = 912280846;
var v813 = 95292071;
var v814 = 326781530;
var v815 = 189110367;
var v816 = 343301607;
var v817 = 592117614;
var v818 = 891178891;
var v819 = 987704933;
var v820 = 177202;
var v821 = 414899764;
var v822 = 811625940;
var v823 = 580616943;
var v824 = 386330814;
var v825 = 714911322;
var v826 = 829022198;
var v827 = 230189472;
var v828 = 190604265;
var v829 = 57639896;
var v830 = 709887705;
var v831 = 493459381;
var v832 = 251797640;
var v833 = 952869719;
var v834 = 526912830;
var v835 = 40710647;
var v836 = 891022047;
var v837 = 446667187;
var v838 = 395131329;
var v839 = 657603889;
var v840 = 294441746;
var v841 = 469899429;
var v842 = 240109152;
var v843 = 864607543;
var v844 = 22509533;
var v845 = 187920051;
var v846 = 293637103;
var v847 = 129113038;
var v848 = 73660393;
var v849 = 609431451;
var v850 = 636430357;
var v851 = 53980133;
var v852 = 234716154;
var v853 = 159560864;
var v854 = 915953476;
var v855 = 1072995445;
var v856 = 342201762;
var v857 = 291544187;
var v858 = 13480667;
var v859 = 447226011;
var v860 = 6104787;
var v861 = 484302228;
var v862 = 91637659;
var v863 = 227273637;
var v864 = 208134278;
var v865 = 31702906;
var v866 = 124100747;
var v867 = 349114139;
var v868 = 377847549;
var v869 = 120412897;
var v870 = 228277348;
var v871 = 256827476;
var v872 = 650342083;
var v873 = 749632123;
var v874 = 548753674;
var v875 = 549183769;
var v876 = 100502719;
var v877 = 350007869;
var v878 = 781636254;
var v879 = 7379413;
var v880 = 872751228;
var v881 = 261098738;
var v882 = 270489981;
var v883 = 535262530;
var v884 = 677041344;
var v885 = 652544471;
var v886 = 980552661;
var v887 = 468527790;
var v888 = 385366687;
var v889 = 714198458;
var v890 = 557010367;
var v891 = 219111596;
var v892 = 314003610;
var v893 = 463386846;
var v894 = 1017015031;
var v895 = 953957205;
var v896 = 742571953;
var v897 = 141804472;
var v898 = 487094738;
var v899 = 487962816;
var v900 = 480630885;
var v901 = 988098077;
var v902 = 694852414;
var v903 = 221298144;
var v904 = 490157191;
var v905 = 700288;
var v906 = 265301076;
var v907 = 348187680;
var v908 = 936586988;
var v909 = 1034998119;
var v910 = 6790098;
var v911 = 737998210;
var v912 = 51397098;
var v913 = 138322150;
var v914 = 121677067;
var v915 = 786546059;
var v916 = 1010884934;
var v917 = 940470034;
var v918 = 987180465;
var v919 = 840767512;
var v920 = 540582682;
var v921 = 244221600;
var v922 = 767822163;
var v923 = 372979937;
var v924 = 606534808;
var v925 = 308606560;
var v926 = 652804550;
var v927 = 264351220;
var v928 = 476082405;
var v929 = 963993627;
var v930 = 787746570;
var v931 = 777706864;
var v932 = 551512107;
var v933 = 439712413;
var v934 = 90841279;
var v935 = 567663608;
var v936 = 309447023;
var v937 = 726225251;
var v938 = 815685592;
var v939 = 977683164;
var v940 = 639786344;
var v941 = 65229270;
var v942 = 907812070;
var v943 = 1031067804;
var v944 = 94563998;
var v945 = 588806572;
var v946 = 229144541;
var v947 = 1037944145;
var v948 = 758305247;
var v949 = 904874098;
var v950 = 1038353053;
var v951 = 124835941;
var v952 = 896233299;
var v953 = 984110664;
var v954 = 120432061;
var v955 = 225751570;
var v956 = 750169385;
var v957 = 441589851;
var v958 = 1014799161;
var v959 = 464816253;
var v960 = 8617719;
var v961 = 105668223;
var v962 = 510762679;
var v963 = 694340171;
var v964 = 824733122;
var v965 = 46108353;
var v966 = 690788976;
var v967 = 820298254;
var v968 = 344338091;
var v969 = 758434626;
var v970 = 813982984;
var v971 = 933414969;
var v972 = 766603789;
var v973 = 693434899;
var v974 = 931181971;
var v975 = 904199494;
var v976 = 474654631;
var v977 = 1063977235;
var v978 = 298042663;
var v979 = 307650161;
var v980 = 886030331;
var v981 = 1011386916;
var v982 = 761866294;
var v983 = 220611348;
var v984 = 608846801;
var v985 = 663696008;
var v986 = 383902959;
var v987 = 187544428;
var v988 = 774418095;
var v989 = 562468271;
var v990 = 881481055;
var v991 = 427893875;
var v992 = 640540054;
var v993 = 350923887;
var v994 = 459767617;
var v995 = 76041260;
var v996 = 839038987;
var v997 = 1048983627;
var v998 = 617698001;
var v999 = 699369329;
var v1000 = 1034477619;
var v1001 = 1033563533;
var v1002 = 107462639;
var v1003 = 630737246;
var v1004 = 14917786;
var v1005 = 214322081;
var v1006 = 637305313;
var v1007 = 208285554;
var v1008 = 333117625;
var v1009 = 269228690;
var v1010 = 391910924;
var v1011 = 1026298104;
var v1012 = 335575174;
var v1013 = 702141676;
var v1014 = 1007700352;
var v1015 = 695968935;
var v1016 = 533410487;
var v1017 = 321649949;
var v1018 = 249726553;
var v1019 = 862164331;
var v1020 = 339673992;
var v1021 = 878160086;
var v1022 = 382500040;
var v1023 = 319375665;
var v1024 = 639063519;
var v1025 = 136734020;
var v1026 = 603191097;
var v1027 = 418011546;
var v1028 = 612536108;
var v1029 = 569425903;
var v1030 = 290678279;
var v1031 = 210073641;
var v1032 = 465895207;
var v1033 = 831943657;
var v1034 = 802872457;
var v1035 = 918304238;
var v1036 = 62982531;
var v1037 = 253715834;
var v1038 = 101559655;
var v1039 = 904220013;
var v1040 = 303312393;
var v1041 = 536313847;
var v1042 = 971445686;
var v1043 = 230720232;
var v1044 = 667924731;
var v1045 = 1058129946;
var v1046 = 891091555;
var v1047 = 265421770;
var v1048 = 191386470;
var v1049 = 485820170;
var v1050 = 872561647;
var v1051 = 208885407;
var v1052 = 48519757;
var v1053 = 148502027;
var v1054 = 572613814;
var v1055 = 10099129;
var v1056 = 154723990;
var v1057 = 416634783;
var v1058 = 522883180;
var v1059 = 591089210;
var v1060 = 608102408;
var v1061 = 184314403;
var v1062 = 823591415;
var v1063 = 268510224;
var v1064 = 581602925;
var v1065 = 799151141;
var v1066 = 443408050;
var v1067 = 403940109;
var v1068 = 322585087;
var v1069 = 430690926;
var v1070 = 484794787;
var v1071 = 948396215;
var v1072 = 36781009;
var v1073 = 43984319;
var v1074 = 686791873;
var v1075 = 489093424;
var v1076 = 855660270;
var v1077 = 544796448;
var v1078 = 590725674;
var v1079 = 145115722;
var v1080 = 994719192;
var v1081 = 208255446;
var v1082 = 1044133534;
var v1083 = 953665434;
var v1084 = 500829592;
var v1085 = 347385015;
var v1086 = 605727576;
var v1087 = 467227458;
var v1088 = 965314188;
var v1089 = 482939580;
var v1090 = 535981139;
var v1091 = 662159365;
var v1092 = 831589094;
var v1093 = 234266238;
var v1094 = 224744020;
var v1095 = 941566045;
var v1096 = 304588885;
var v1097 = 1065308432;
var v1098 = 587626860;
var v1099 = 1070650083;
var v1100 = 921558741;
var v1101 = 187727199;
var v1102 = 866494168;
var v1103 = 306455735;
var v1104 = 547252372;
var v1105 = 16564173;
var v1106 = 651296054;
var v1107 = 179086784;
var v1108 = 148545591;
var v1109 = 197138849;
var v1110 = 561599867;
var v1111 = 282535493;
var v1112 = 718989491;
var v1113 = 75712834;
var v1114 = 151506398;
var v1115 = 839667192;
var v1116 = 853727394;
var v1117 = 20706190;
var v1118 = 205078292;
var v1119 = 701452699;
var v1120 = 118463743;
var v1121 = 485059990;
var v1122 = 623951500;
var v1123 = 89760060;
var v1124 = 716404504;
var v1125 = 390205955;
var v1126 = 687668940;
var v1127 = 185524281;
var v1128 = 83375950;
var v1129 = 832798245;
var v1130 = 823211620;
var v1131 = 373911207;
var v1132 = 113664047;
var v1133 = 240910120;
var v1134 = 280678297;
var v1135 = 199192554;
var v1136 = 285524353;
var v1137 = 638148040;
var v1138 = 21746668;
var v1139 = 64342289;
var v1140 = 252575038;
var v1141 = 669943159;
var v1142 = 188671720;
var v1143 = 87602445;
var v1144 = 490381743;
var v1145 = 558249237;
var v1146 = 448201695;
var v1147 = 133411050;
var v1148 = 886522508;
var v1149 = 341130641;
var v1150 = 489299360;
var v1151 = 39660250;
var v1152 = 338319531;
var v1153 = 212037247;
var v1154 = 566403346;
var v1155 = 866216161;
var v1156 = 567158740;
var v1157 = 729721334;
var v1158 = 478177803;
var v1159 = 119623301;
var v1160 = 679866267;
var v1161 = 1022572625;
var v1162 = 315383964;
var v1163 = 379315539;
var v1164 = 714612990;
var v1165 = 193539773;
var v1166 = 1003330332;
var v1167 = 1057694443;
var v1168 = 148410639;
var v1169 = 954935288;
var v1170 = 354955079;
var v1171 = 122466647;
var v1172 = 657885822;
var v1173 = 142073842;
var v1174 = 29855881;
var v1175 = 917387268;
var v1176 = 103682407;
var v1177 = 431355331;
var v1178 = 626908116;
var v1179 = 782893171;
var v1180 = 483254461;
var v1181 = 287216175;
var v1182 = 972386109;
var v1183 = 1066094716;
var v1184 = 567370004;
var v1185 = 461447982;
var v1186 = 358277069;
var v1187 = 501732083;
var v1188 = 970533363;
var v1189 = 117843275;
var v1190 = 1011925541;
var v1191 = 861825883;
var v1192 = 976046459;
var v1193 = 149060198;
var v1194 = 983433878;
var v1195 = 329187557;
var v1196 = 80568340;
var v1197 = 98962028;
var v1198 = 156526791;
var v1199 = 1013462402;
var v1200 = 89097435;
var v1201 = 685073447;
var v1202 = 31205421;
var v1203 = 964492512;
var v1204 = 637221615;
var v1205 = 266152527;
var v1206 = 540192696;
var v1207 = 773451604;
var v1208 = 593508164;
var v1209 = 77658403;
var v1210 = 597281590;
var v1211 = 372791164;
var v1212 = 748884693;
var v1213 = 914514211;
var v1214 = 465851059;
var v1215 = 551950338;
var v1216 = 245497171;
var v1217 = 167281173;
var v1218 = 1026350697;
var v1219 = 907372298;
var v1220 = 324864172;
var v1221 = 613664177;
var v1222 = 62965293;
var v1223 = 50352024;
var v1224 = 950183393;
var v1225 = 627330345;
var v1226 = 943924297;
var v1227 = 403302453;
var v1228 = 743696867;
var v1229 = 986849239;
var v1230 = 974312865;
var v1231 = 546850601;
var v1232 = 459952033;
var v1233 = 128787735;
var v1234 = 9845541;
var v1235 = 792878474;
var v1236 = 187742467;
var v1237 = 51635437;
var v1238 = 456540172;
var v1239 = 122966606;
var v1240 = 56707209;
var v1241 = 839847280;
var v1242 = 807525746;
var v1243 = 503555646;
var v1244 = 540130737;
var v1245 = 819455011;
var v1246 = 161936166;
var v1247 = 789729779;
var v1248 = 894269913;
var v1249 = 357581743;
var v1250 = 70450909;
var v1251 = 1059045817;
var v1252 = 725969495;
var v1253 = 521990453;
var v1254 = 652739785;
var v1255 = 599139300;
var v1256 = 529484555;
var v1257 = 105292523;
var v1258 = 217554539;
var v1259 = 500229739;
var v1260 = 607465258;
var v1261 = 401173121;
var v1262 = 954601909;
var v1263 = 75994205;
var v1264 = 494673962;
var v1265 = 312170916;
var v1266 = 316084972;
var v1267 = 305245884;
var v1268 = 702773550;
var v1269 = 158006511;
var v1270 = 1001403098;
var v1271 = 734947830;
var v1272 = 479370816;
var v1273 = 517898565;
var v1274 = 29676603;
var v1275 = 415530520;
var v1276 = 813731066;
var v1277 = 703431944;
var v1278 = 280322273;
var v1279 = 682695096;
var v1280 = 383617091;
var v1281 = 553232563;
var v1282 = 485346902;
var v1283 = 764615794;
var v1284 = 405593967;
var v1285 = 444229697;
var v1286 = 503861753;
var v1287 = 169830656;
var v1288 = 988577944;
var v1289 = 635356668;
var v1290 = 187772825;
var v1291 = 746017078;
var v1292 = 745096035;
var v1293 = 685646568;
var v1294 = 967450822;
var v1295 = 455844672;
var v1296 = 333913384;
var v1297 = 580178646;
var v1298 = 619086191;
var v1299 = 467996468;
var v1300 = 692744188;
var v1301 = 465050645;
var v1302 = 510547579;
var v1303 = 390638406;
var v1304 = 989743881;
var v1305 = 913987816;
var v1306 = 305232959;
var v1307 = 173923147;
var v1308 = 400866035;
var v1309 = 271642696;
var v1310 = 1003904767;
var v1311 = 492124264;
var v1312 = 62583600;
var v1313 = 451446614;
var v1314 = 283451934;
var v1315 = 138158916;
var v1316 = 84904819;
var v1317 = 792060889;
var v1318 = 101005256;
var v1319 = 393922285;
var v1320 = 18847626;
var v1321 = 420503621;
var v1322 = 68939834;
var v1323 = 749169780;
var v1324 = 972532427;
var v1325 = 314562751;
var v1326 = 1026045782;
var v1327 = 388731509;
var v1328 = 703762597;
var v1329 = 222372032;
var v1330 = 701709512;
var v1331 = 759664023;
var v1332 = 137238425;
var v1333 = 923732546;
var v1334 = 650727418;
var v1335 = 762809188;
var v1336 = 132289180;
var v1337 = 771635851;
var v1338 = 345737748;
var v1339 = 557375695;
var v1340 = 284289035;
var v1341 = 409265235;
var v1342 = 615664452;
var v1343 = 561530024;
var v1344 = 213363603;
var v1345 = 167182328;
var v1346 = 537503062;
var v1347 = 191302380;
var v1348 = 1011422063;
var v1349 = 421322936;
var v1350 = 385072612;
var v1351 = 687966975;
var v1352 = 307959836;
var v1353 = 195194216;
var v1354 = 422399963;
var v1355 = 715430564;
var v1356 = 581124920;
var v1357 = 494160634;
var v1358 = 963803650;
var v1359 = 272336061;
var v1360 = 187813310;
var v1361 = 1017976632;
var v1362 = 771778622;
var v1363 = 509278753;
var v1364 = 35866017;
var v1365 = 342258067;
var v1366 = 995109121;
var v1367 = 270046777;
var v1368 = 772524917;
var v1369 = 253189237;
var v1370 = 670302238;
var v1371 = 643670390;
var v1372 = 995674762;
var v1373 = 625746153;
var v1374 = 282012501;
var v1375 = 505023861;
var v1376 = 160453526;
var v1377 = 368814558;
var v1378 = 289495751;
var v1379 = 1007467184;
var v1380 = 691803136;
var v1381 = 728637036;
var v1382 = 617090986;
var v1383 = 135539479;
var v1384 = 949922048;
var v1385 = 980389235;
var v1386 = 469393276;
var v1387 = 756706446;
var v1388 = 813178516;
var v1389 = 23346706;
var v1390 = 494849868;
var v1391 = 97973229;
var v1392 = 800541383;
var v1393 = 235333453;
var v1394 = 141241845;
var v1395 = 405727399;
var v1396 = 112709110;
var v1397 = 426106622;
var v1398 = 986550930;
var v1399 = 943875502;
var v1400 = 565990737;
var v1401 = 653891827;
var v1402 = 826236022;
var v1403 = 258892661;
var v1404 = 990299996;
var v1405 = 149185938;
var v1406 = 795734320;
var v1407 = 342065649;
var v1408 = 797076747;
var v1409 = 983019214;
var v1410 = 285988598;
var v1411 = 801329962;
var v1412 = 966576323;
var v1413 = 29685134;
var v1414 = 599051967;
var v1415 = 427241335;
var v1416 = 980960377;
var v1417 = 832401712;
var v1418 = 253320454;
var v1419 = 1040526183;
var v1420 = 509571054;
var v1421 = 1057101821;
var v1422 = 2988965;
var v1423 = 365054665;
var v1424 = 968991330;
var v1425 = 135063583;
var v1426 = 259448388;
var v1427 = 625545102;
var v1428 = 545477463;
var v1429 = 815702554;
var v1430 = 800822748;
var v1431 = 711763213;
var v1432 = 280607609;
var v1433 = 71088067;
var v1434 = 356361806;
var v1435 = 82767381;
var v1436 = 117364592;
var v1437 = 979315337;
var v1438 = 340540740;
var v1439 = 822606101;
var v1440 = 190434661;
var v1441 = 314372029;
var v1442 = 1000928961;
var v1443 = 122857118;
var v1444 = 571220038;
var v1445 = 335197769;
var v1446 = 1035133163;
var v1447 = 404501659;
var v1448 = 58890327;
var v1449 = 470175265;
var v1450 = 403939691;
var v1451 = 249488519;
var v1452 = 202353284;
var v1453 = 805431726;
var v1454 = 905775155;
var v1455 = 50571560;
var v1456 = 674605048;
var v1457 = 306045266;
var v1458 = 186737919;
var v1459 = 1010283875;
var v1460 = 505841537;
var v1461 = 980254574;
var v1462 = 490168617;
var v1463 = 263466116;
var v1464 = 561713732;
var v1465 = 534596587;
var v1466 = 948483899;
var v1467 = 982054262;
var v1468 = 614839954;
var v1469 = 873255272;
var v1470 = 667296493;
var v1471 = 654883313;
var v1472 = 432636267;
var v1473 = 223279472;
var v1474 = 49776995;
var v1475 = 476004059;
var v1476 = 826005572;
var v1477 = 298624444;
var v1478 = 1055837199;
var v1479 = 893038367;
var v1480 = 851085523;
var v1481 = 932678876;
var v1482 = 747882153;
var v1483 = 241095654;
var v1484 = 394818600;
var v1485 = 63875754;
var v1486 = 101512072;
var v1487 = 535692949;
var v1488 = 304210345;
var v1489 = 920867898;
var v1490 = 875900387;
var v1491 = 378019844;
var v1492 = 1034847961;
var v1493 = 310426344;
var v1494 = 274666316;
var v1495 = 843672840;
var v1496 = 198420561;
var v1497 = 447373767;
var v1498 = 654205257;
var v1499 = 705921020;
var v1500 = 505672841;
var v1501 = 423902509;
var v1502 = 107269995;
var v1503 = 473879972;
var v1504 = 375716653;
var v1505 = 531546145;
var v1506 = 718552498;
var v1507 = 881743240;
var v1508 = 529476112;
var v1509 = 897751241;
var v1510 = 611396760;
var v1511 = 860922126;
var v1512 = 433682110;
var v1513 = 32081906;
var v1514 = 868994630;
var v1515 = 372348877;
var v1516 = 973021678;
var v1517 = 934372530;
var v1518 = 370258928;
var v1519 = 155016554;
var v1520 = 437512251;
var v1521 = 149693193;
var v1522 = 91840445;
var v1523 = 464042799;
var v1524 = 57090457;
var v1525 = 575843345;
var v1526 = 120237025;
var v1527 = 445351057;
var v1528 = 203959830;
var v1529 = 983624056;
var v1530 = 147496967;
var v1531 = 134143669;
var v1532 = 523822986;
var v1533 = 39623172;
var v1534 = 864276765;
var v1535 = 741219490;
var v1536 = 380834741;
var v1537 = 544472047;
var v1538 = 239501746;
var v1539 = 526135995;
var v1540 = 563368395;
var v1541 = 344019810;
var v1542 = 984184966;
var v1543 = 1044084408;
var v1544 = 243657502;
var v1545 = 813227881;
var v1546 = 296330584;
var v1547 = 1004389284;
var v1548 = 377340156;
var v1549 = 128853305;
var v1550 = 797503210;
var v1551 = 1033208455;
var v1552 = 272245543;
var v1553 = 1025301845;
var v1554 = 1053114682;
var v1555 = 949043191;
var v1556 = 153213587;
var v1557 = 508457934;
var v1558 = 1016454580;
var v1559 = 570922608;
var v1560 = 272814070;
var v1561 = 736389638;
var v1562 = 579694969;
var v1563 = 323018369;
var v1564 = 585936585;
var v1565 = 551307876;
var v1566 = 575741091;
var v1567 = 301459708;
var v1568 = 65521304;
var v1569 = 188557445;
var v1570 = 353704473;
var v1571 = 1014621063;
var v1572 = 169139644;
var v1573 = 613259748;
var v1574 = 948907507;
var v1575 = 50494750;
var v1576 = 146860123;
var v1577 = 121097467;
var v1578 = 614659125;
var v1579 = 290823340;
var v1580 = 736910324;
var v1581 = 325044936;
var v1582 = 793607060;
var v1583 = 384467558;
var v1584 = 675312872;
var v1585 = 897775929;
var v1586 = 262267124;
var v1587 = 602260448;
var v1588 = 471003854;
var v1589 = 408689202;
var v1590 = 474654013;
var v1591 = 755076387;
var v1592 = 7703209;
var v1593 = 595205423;
var v1594 = 861224572;
var v1595 = 189625908;
var v1596 = 1040505399;
var v1597 = 54188692;
var v1598 = 878509505;
var v1599 = 626841700;
var v1600 = 1053982493;
var v1601 = 603387298;
var v1602 = 649024952;
var v1603 = 966210452;
var v1604 = 482668645;
var v1605 = 877447987;
var v1606 = 1069840410;
var v1607 = 375755114;
var v1608 = 163397132;
var v1609 = 156053823;
var v1610 = 228224715;
var v1611 = 219117097;
var v1612 = 948014245;
var v1613 = 246197207;
var v1614 = 416974120;
var v1615 = 8255427;
var v1616 = 40864895;
var v1617 = 722214562;
var v1618 = 208629107;
var v1619 = 1041339076;
var v1620 = 420082328;
var v1621 = 291049533;
var v1622 = 591743518;
var v1623 = 935705212;
var v1624 = 968297617;
var v1625 = 572643595;
var v1626 = 623587979;
var v1627 = 101617354;
var v1628 = 838522153;
var v1629 = 553433964;
var v1630 = 421534705;
var v1631 = 189231804;
var v1632 = 580965093;
var v1633 = 392816961;
var v1634 = 478139734;
var v1635 = 1003629642;
var v1636 = 92358289;
var v1637 = 891467806;
var v1638 = 1022720355;
var v1639 = 259402657;
var v1640 = 998585296;
var v1641 = 320914770;
var v1642 = 941671287;
var v1643 = 519671990;
var v1644 = 521299797;
var v1645 = 1044902871;
var v1646 = 1037561896;
var v1647 = 656561607;
var v1648 = 863879980;
var v1649 = 263747164;
var v1650 = 203203642;
var v1651 = 1061913958;
var v1652 = 556256852;
var v1653 = 827365936;
var v1654 = 295845861;
var v1655 = 636085926;
var v1656 = 977933762;
var v1657 = 254847044;
var v1658 = 346422771;
var v1659 = 604319504;
var v1660 = 874716868;
var v1661 = 867183118;
var v1662 = 301802277;
var v1663 = 733955869;
var v1664 = 378724840;
var v1665 = 138515338;
var v1666 = 671518358;
var v1667 = 259515572;
var v1668 = 944002131;
var v1669 = 789958998;
var v1670 = 443408950;
var v1671 = 304324763;
var v1672 = 128161114;
var v1673 = 866371407;
var v1674 = 984431236;
var v1675 = 169158240;
var v1676 = 960705553;
var v1677 = 535934752;
var v1678 = 33480731;
var v1679 = 310341651;
var v1680 = 23919851;
var v1681 = 618118408;
var v1682 = 756678684;
var v1683 = 152572640;
var v1684 = 237650209;
var v1685 = 376679241;
var v1686 = 763984169;
var v1687 = 449659508;
var v1688 = 629740857;
var v1689 = 249041640;
var v1690 = 219125077;
var v1691 = 338148825;
var v1692 = 686110001;
var v1693 = 337618849;
var v1694 = 615038959;
var v1695 = 919456033;
var v1696 = 702037792;
var v1697 = 917428035;
var v1698 = 493866388;
var v1699 = 45624038;
var v1700 = 507405500;
var v1701 = 879265792;
var v1702 = 982932179;
var v1703 = 731894391;
var v1704 = 882586506;
var v1705 = 389418074;
var v1706 = 105050189;
var v1707 = 824368318;
var v1708 = 356714824;
var v1709 = 565311471;
var v1710 = 429785915;
var v1711 = 333672938;
var v1712 = 42751014;
var v1713 = 794912786;
var v1714 = 815750282;
var v1715 = 684335203;
var v1716 = 915909131;
var v1717 = 252600351;
var v1718 = 447978384;
var v1719 = 625907013;
var v1720 = 710213160;
var v1721 = 482730741;
var v1722 = 559968700;
var v1723 = 124759775;
var v1724 = 151539761;
var v1725 = 232878516;
var v1726 = 20626475;
var v1727 = 537350564;
var v1728 = 1027010461;
var v1729 = 64992477;
var v1730 = 863007770;
var v1731 = 382304309;
var v1732 = 489695858;
var v1733 = 833734888;
var v1734 = 889200876;
var v1735 = 1033277979;
var v1736 = 599859625;
var v1737 = 650992111;
var v1738 = 358961661;
var v1739 = 184929898;
var v1740 = 578904478;
var v1741 = 539082824;
var v1742 = 174270082;
var v1743 = 598884756;
var v1744 = 632948997;
var v1745 = 36341238;
var v1746 = 101143839;
var v1747 = 936668230;
var v1748 = 3728915;
var v1749 = 266794452;
var v1750 = 572307008;
var v1751 = 153063923;
var v1752 = 133264480;
var v1753 = 450671477;
var v1754 = 1000219188;
var v1755 = 758845822;
var v1756 = 633592555;
var v1757 = 934058595;
var v1758 = 314299846;
var v1759 = 751184990;
var v1760 = 566450120;
var v1761 = 1017666489;
var v1762 = 970583311;
var v1763 = 36731275;
var v1764 = 872815602;
var v1765 = 18278571;
var v1766 = 623595624;
var v1767 = 759096881;
var v1768 = 968057761;
var v1769 = 820654498;
var v1770 = 124321603;
var v1771 = 74747767;
var v1772 = 518558880;
var v1773 = 703816274;
var v1774 = 410834337;
var v1775 = 1072462102;
var v1776 = 816979236;
var v1777 = 458883157;
var v1778 = 350242630;
var v1779 = 202086432;
var v1780 = 268948701;
var v1781 = 941742319;
var v1782 = 191388606;
var v1783 = 191052233;
var v1784 = 729976791;
var v1785 = 655553401;
var v1786 = 657934370;
var v1787 = 635169913;
var v1788 = 591671152;
var v1789 = 785590167;
var v1790 = 861913396;
var v1791 = 672079658;
var v1792 = 681196122;
var v1793 = 490635079;
var v1794 = 941266299;
var v1795 = 340342236;
var v1796 = 631887035;
var v1797 = 959447291;
var v1798 = 898410465;
var v1799 = 496478661;
var v1800 = 514569086;
var v1801 = 892457782;
var v1802 = 400255359;
var v1803 = 181956954;
var v1804 = 1027716912;
var v1805 = 890763323;
var v1806 = 571072738;
var v1807 = 657011689;
var v1808 = 635030971;
var v1809 = 920505552;
var v1810 = 896236165;
var v1811 = 862133829;
var v1812 = 650001054;
var v1813 = 549707785;
var v1814 = 798446583;
var v1815 = 715451760;
var v1816 = 620626850;
var v1817 = 736186939;
var v1818 = 924438653;
var v1819 = 454219621;
var v1820 = 460518413;
var v1821 = 225013070;
var v1822 = 1062012279;
var v1823 = 778528410;
var v1824 = 284461553;
var v1825 = 685395689;
var v1826 = 428777022;
var v1827 = 814204647;
var v1828 = 744406869;
var v1829 = 731205306;
var v1830 = 1016290096;
var v1831 = 257449807;
var v1832 = 920264771;
var v1833 = 1006071859;
var v1834 = 78322475;
var v1835 = 677568040;
var v1836 = 28481117;
var v1837 = 238658241;
var v1838 = 787595941;
var v1839 = 979940366;
var v1840 = 718673546;
var v1841 = 89051954;
var v1842 = 695001632;
var v1843 = 208401592;
var v1844 = 815884896;
var v1845 = 19602318;
var v1846 = 906209560;
var v1847 = 809357712;
var v1848 = 259166682;
var v1849 = 602475995;
var v1850 = 739547955;
var v1851 = 860836332;
var v1852 = 134591604;
var v1853 = 442802362;
var v1854 = 108525345;
var v1855 = 543766397;
var v1856 = 1009692119;
var v1857 = 358323122;
var v1858 = 47550369;
var v1859 = 868450811;
var v1860 = 870654999;
var v1861 = 335608631;
var v1862 = 656261500;
var v1863 = 936838374;
var v1864 = 292424771;
var v1865 = 505492450;
var v1866 = 352409838;
var v1867 = 769899989;
var v1868 = 643727253;
var v1869 = 222465559;
var v1870 = 1056519344;
var v1871 = 544736778;
var v1872 = 219017296;
var v1873 = 667689716;
var v1874 = 1006951201;
var v1875 = 373711168;
var v1876 = 159068486;
var v1877 = 1012412973;
var v1878 = 192243068;
var v1879 = 208185849;
var v1880 = 229643537;
var v1881 = 695696461;
var v1882 = 856870537;
var v1883 = 230178026;
var v1884 = 272997958;
var v1885 = 299566472;
var v1886 = 851970941;
var v1887 = 700041833;
var v1888 = 583976573;
var v1889 = 561552505;
var v1890 = 694812778;
var v1891 = 36861691;
var v1892 = 572968145;
var v1893 = 859174187;
var v1894 = 1034501861;
var v1895 = 553198182;
var v1896 = 492409965;
var v1897 = 526319510;
var v1898 = 119331340;
var v1899 = 915226753;
var v1900 = 61867097;
var v1901 = 693883878;
var v1902 = 794020121;
var v1903 = 224166987;
var v1904 = 748264637;
var v1905 = 520190874;
var v1906 = 283610905;
var v1907 = 692083351;
var v1908 = 160472630;
var v1909 = 344142987;
var v1910 = 604899484;
var v1911 = 227878063;
var v1912 = 940086212;
var v1913 = 922804720;
var v1914 = 321076241;
var v1915 = 749633864;
var v1916 = 790609051;
var v1917 = 132022791;
var v1918 = 209616836;
var v1919 = 276970886;
var v1920 = 81254116;
var v1921 = 892540297;
var v1922 = 601229939;
var v1923 = 47801435;
var v1924 = 377178471;
var v1925 = 1052397074;
var v1926 = 536449108;
var v1927 = 412520461;
var v1928 = 341786475;
var v1929 = 717351450;
var v1930 = 127995184;
var v1931 = 961072212;
var v1932 = 334285524;
var v1933 = 1003235931;
var v1934 = 51303962;
var v1935 = 10928375;
var v1936 = 425944455;
var v1937 = 97892698;
var v1938 = 362279694;
var v1939 = 593846773;
var v1940 = 195280002;
var v1941 = 338391993;
var v1942 = 1019974019;
var v1943 = 590132210;
var v1944 = 165416282;
var v1945 = 468365260;
var v1946 = 655994526;
var v1947 = 663425124;
var v1948 = 842628671;
var v1949 = 51066336;
var v1950 = 550949597;
var v1951 = 1034282198;
var v1952 = 872304314;
var v1953 = 336788621;
var v1954 = 67866076;
var v1955 = 638960621;
var v1956 = 328084753;
var v1957 = 173077508;
var v1958 = 487400413;
var v1959 = 589574936;
var v1960 = 318214595;
var v1961 = 679564156;
var v1962 = 215001805;
var v1963 = 499502619;
var v1964 = 1053191213;
var v1965 = 435753324;
var v1966 = 707806008;
var v1967 = 309113879;
var v1968 = 1013797884;
var v1969 = 472157570;
var v1970 = 525036881;
var v1971 = 1024236728;
var v1972 = 816169344;
var v1973 = 211830398;
var v1974 = 288879527;
var v1975 = 1016643229;
var v1976 = 708414434;
var v1977 = 113071505;
var v1978 = 292237138;
var v1979 = 476487988;
var v1980 = 713604000;
var v1981 = 975580400;
var v1982 = 272551183;
var v1983 = 919440763;
var v1984 = 935738069;
var v1985 = 879742929;
var v1986 = 935886873;
var v1987 = 556476947;
var v1988 = 1051426831;
var v1989 = 1066988786;
var v1990 = 555032326;
var v1991 = 923024388;
var v1992 = 300207038;
var v1993 = 499911887;
var v1994 = 553941147;
var v1995 = 277371819;
var v1996 = 1026249176;
var v1997 = 657615682;
var v1998 = 403632305;
var v1999 = 934066664;
var v2000 = 296777389;
var v2001 = 865465449;
var v2002 = 717618529;
var v2003 = 230047196;
var v2004 = 497103169;
var v2005 = 496898326;
var v2006 = 842919444;
var v2007 = 930363689;
var v2008 = 917765232;
var v2009 = 711164585;
var v2010 = 952385476;
var v2011 = 910185283;
var v2012 = 128136576;
var v2013 = 150542381;
var v2014 = 228117057;
var v2015 = 709412065;
var v2016 = 842887969;
var v2017 = 584590155;
var v2018 = 768867586;
var v2019 = 49020164;
var v2020 = 73442243;
var v2021 = 184733702;
var v2022 = 592674505;
var v2023 = 1031909231;
var v2024 = 421305074;
var v2025 = 243809171;
var v2026 = 783632774;
var v2027 = 631244707;
var v2028 = 684117272;
var v2029 = 941822806;
var v2030 = 342123235;
var v2031 = 349569276;
var v2032 = 318342214;
var v2033 = 532089599;
var v2034 = 778873160;
var v2035 = 278845646;
var v2036 = 863577407;
var v2037 = 325829889;
var v2038 = 745731828;
var v2039 = 369506668;
var v2040 = 647150097;
var v2041 = 1384119;
var v2042 = 750751695;
var v2043 = 113846049;
var v2044 = 208892997;
var v2045 = 168974641;
var v2046 = 444592455;
var v2047 = 139405172;
var v2048 = 696196021;
var v2049 = 534319093;
var v2050 = 681671828;
var v2051 = 231942508;
var v2052 = 813514038;
var v2053 = 109637814;
var v2054 = 521120088;
var v2055 = 484087867;
var v2056 = 528315987;
var v2057 = 333434190;
var v2058 = 461770784;
var v2059 = 328573707;
var v2060 = 1011003429;
var v2061 = 765483368;
var v2062 = 379216487;
var v2063 = 436859311;
var v2064 = 582055323;
var v2065 = 541456201;
var v2066 = 265468410;
var v2067 = 675842565;
var v2068 = 266679790;
var v2069 = 367383535;
var v2070 = 894071184;
var v2071 = 744390859;
var v2072 = 978387930;
var v2073 = 382488961;
var v2074 = 237860182;
var v2075 = 494612485;
var v2076 = 546116353;
var v2077 = 659325167;
var v2078 = 993661522;
var v2079 = 544296130;
var v2080 = 378885808;
var v2081 = 798328834;
var v2082 = 1028787597;
var v2083 = 285773578;
var v2084 = 655050040;
var v2085 = 995743851;
var v2086 = 1067849819;
var v2087 = 808521879;
var v2088 = 265007868;
var v2089 = 845936171;
var v2090 = 1014771206;
var v2091 = 428019865;
var v2092 = 383735376;
var v2093 = 25636957;
var v2094 = 770679687;
var v2095 = 149603856;
var v2096 = 515612199;
var v2097 = 314948861;
var v2098 = 303121986;
var v2099 = 311978266;
var v2100 = 630830919;
var v2101 = 838148765;
var v2102 = 483883980;
var v2103 = 210850783;
var v2104 = 505923696;
var v2105 = 315048974;
var v2106 = 469298415;
var v2107 = 266809370;
var v2108 = 970626387;
var v2109 = 579073756;
var v2110 = 747222830;
var v2111 = 120079958;
var v2112 = 576679841;
var v2113 = 233158947;
var v2114 = 774594275;
var v2115 = 501414673;
var v2116 = 325442686;
var v2117 = 489845970;
var v2118 = 467291051;
var v2119 = 474251560;
var v2120 = 878931897;
var v2121 = 1040503695;
var v2122 = 27933685;
var v2123 = 981541776;
var v2124 = 713093570;
var v2125 = 1021889645;
var v2126 = 496417232;
var v2127 = 1000416167;
var v2128 = 614425233;
var v2129 = 259065640;
var v2130 = 892122004;
var v2131 = 667489643;
var v2132 = 858016834;
var v2133 = 1047486407;
var v2134 = 292326140;
var v2135 = 738607497;
var v2136 = 372474282;
var v2137 = 425010392;
var v2138 = 977229283;
var v2139 = 256586720;
var v2140 = 629094657;
var v2141 = 155539927;
var v2142 = 291471949;
var v2143 = 100072597;
var v2144 = 484961269;
var v2145 = 814391371;
var v2146 = 1025257231;
var v2147 = 933912741;
var v2148 = 568837591;
var v2149 = 62082270;
var v2150 = 187640862;
var v2151 = 431953525;
var v2152 = 625461993;
var v2153 = 450693141;
var v2154 = 847588756;
var v2155 = 755908921;
var v2156 = 309185992;
var v2157 = 678716777;
var v2158 = 527953942;
var v2159 = 782039946;
var v2160 = 464799457;
var v2161 = 546780106;
var v2162 = 461139774;
var v2163 = 626091099;
var v2164 = 400486816;
var v2165 = 697916981;
var v2166 = 1017291056;
var v2167 = 346784016;
var v2168 = 371648225;
var v2169 = 548818713;
var v2170 = 121336498;
var v2171 = 723099741;
var v2172 = 975777483;
var v2173 = 603366187;
var v2174 = 883775438;
var v2175 = 32705518;
var v2176 = 39904351;
var v2177 = 662056389;
var v2178 = 156443734;
var v2179 = 73421246;
var v2180 = 502820060;
var v2181 = 200463705;
var v2182 = 189866176;
var v2183 = 667138150;
var v2184 = 451959087;
var v2185 = 626062473;
var v2186 = 236066940;
var v2187 = 470086299;
var v2188 = 810893046;
var v2189 = 864439555;
var v2190 = 1032263704;
var v2191 = 868931435;
var v2192 = 792010303;
var v2193 = 576007837;
var v2194 = 510649255;
var v2195 = 210723961;
var v2196 = 487931804;
var v2197 = 464222157;
var v2198 = 201629308;
var v2199 = 726932065;
var v2200 = 1048109778;
var v2201 = 816585382;
var v2202 = 948172100;
var v2203 = 757413036;
var v2204 = 475216179;
var v2205 = 387793100;
var v2206 = 815357998;
var v2207 = 299529643;
var v2208 = 125460618;
var v2209 = 401238942;
var v2210 = 372684175;
var v2211 = 37767190;
var v2212 = 181296943;
var v2213 = 13904328;
var v2214 = 626881871;
var v2215 = 785127867;
var v2216 = 466356788;
var v2217 = 109545064;
var v2218 = 479067663;
var v2219 = 801034491;
var v2220 = 863851429;
var v2221 = 721372684;
var v2222 = 842130453;
var v2223 = 254944317;
var v2224 = 320798714;
var v2225 = 494285690;
var v2226 = 739855517;
var v2227 = 807096746;
var v2228 = 565058488;
var v2229 = 273850510;
var v2230 = 516883687;
var v2231 = 947511464;
var v2232 = 327847289;
var v2233 = 282517742;
var v2234 = 610919513;
var v2235 = 1029848198;
var v2236 = 890722286;
var v2237 = 331686181;
var v2238 = 760446016;
var v2239 = 832116041;
var v2240 = 311683646;
var v2241 = 148292546;
var v2242 = 736045939;
var v2243 = 162808157;
var v2244 = 205371495;
var v2245 = 365205822;
var v2246 = 119274935;
var v2247 = 771724322;
var v2248 = 362284086;
var v2249 = 99408357;
var v2250 = 959791559;
var v2251 = 336393112;
var v2252 = 54761665;
var v2253 = 396355236;
var v2254 = 432378094;
var v2255 = 685642175;
var v2256 = 416681551;
var v2257 = 52103146;
var v2258 = 626399504;
var v2259 = 892225221;
var v2260 = 1059411041;
var v2261 = 868184512;
var v2262 = 127718633;
var v2263 = 676268669;
var v2264 = 1073389306;
var v2265 = 538162547;
var v2266 = 191837902;
var v2267 = 119996522;
var v2268 = 842598578;
var v2269 = 667565209;
var v2270 = 274931452;
var v2271 = 986417893;
var v2272 = 149807703;
var v2273 = 999844253;
var v2274 = 1010885707;
var v2275 = 948756630;
var v2276 = 111248489;
var v2277 = 204475487;
var v2278 = 51457439;
var v2279 = 428509054;
var v2280 = 47146449;
var v2281 = 180560021;
var v2282 = 579862284;
var v2283 = 23611865;
var v2284 = 960490560;
var v2285 = 575472396;
var v2286 = 645807236;
var v2287 = 3637187;
var v2288 = 198494306;
var v2289 = 596906767;
var v2290 = 491120298;
var v2291 = 166242125;
var v2292 = 134080749;
var v2293 = 724197513;
var v2294 = 456875535;
var v2295 = 15363093;
var v2296 = 713097708;
var v2297 = 510846421;
var v2298 = 7930088;
var v2299 = 998333527;
var v2300 = 184957259;
var v2301 = 970773010;
var v2302 = 715956475;
var v2303 = 873920953;
var v2304 = 440915506;
var v2305 = 478558111;
var v2306 = 651103559;
