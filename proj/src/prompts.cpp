#include "respeval/prompts.hpp"

#include "respeval/utf8.hpp"

namespace respeval::prompts {

namespace {

// Rubric text must stay byte-identical to tests/fixtures/prompts/{en,ko}; the English typos are
// intentional. Korean rubrics keep the JSON keys and the closing Conversation lines in English.
constexpr std::string_view k_en_system = R"PROMPT(You are an expert evaluator for a human-AI conversation dataset. Your task is to evaluate the quality of the responses in the dataset based on the given criteria.)PROMPT";
constexpr std::string_view k_en_effort = R"PROMPT(Rate how much thought and detail the user put into the response.
Use the following 0–7 scale. The score must be an integer.
Base your judgment on the information content, specificity, and how well the user responds to the question.

Examples are provided to guide interpretation:

0: No meaningful response. The answer is either empty or completely unrelated.
  • Information: None
  • Specificity: None
  • Response to question: Not at all
  e.g., “N/A”, “blah”, “asdf”

1: Vague or evasive, such as default or placeholder answers that avoid the question.
  • Information: Minimal or token or negligible
  • Specificity: None
  • Response to question: Barely reacts, without offering any insight or detail
  e.g., “Good”, “Okay”, “I don't know”, “Maybe”

2: Vague or generic opinion. Slightly more than a one-word answer, but still lacking substance.
  • Information: Very low
  • Specificity: Very low
  • Response to question: Barely reacts
  e.g., “Pretty good overall”, “Not bad”, “Nice”

3: A short opinion that includes a single element or impression.
  • Information: Low
  • Specificity: Low
  • Response to question: Partially addresses one aspect
  e.g., “Liked the burger”, “Sick fries”, “Nice vibe”

4: Slightly more informative with two aspects mentioned, but still minimal explanation.
  • Information: Slightly basic
  • Specificity: Limited
  • Response to question: Briefly addresses two parts
  e.g., “Burger was good. Service okay”, “Decent food but small portions”

5: Thoughtful response with several clear opinions and specific examples.
  • Information: Moderate to detailed
  • Specificity: Moderate to clear
  • Response to question: Engages with key parts
  e.g., “Tasty food, but nothing special.”, “Fries were crisp and burger was hot, but too salty.”

6: Very rich and nuanced response; explains what stood out and why.
  • Information: Very high
  • Specificity: Very high
  • Response to question: Deeply addresses the question with insight
  e.g., “The burger had a smoky flavor, fries were hot and crisp, and the vintage vibe was cool. Pricey, but worth it.”

7: Exceptionally detailed, thoughtful, and complete. Evaluates multiple dimensions (e.g., food, service, atmosphere) with depth and personality.
  • Information: Comprehensive
  • Specificity: Deep
  • Response to question: Fully and thoughtfully addressed
  e.g., “Burger exceeded expectations. The double bacon burger was perfectly cooked, the bun was fresh, fries had just the right crunch. Staff were welcoming, and the drive-in movie setup made the experience unique.”

Read the given criteria carefully and follow them faithfully.
Return your evaluation as a JSON dictionary without any additional text:

{
  "effort": <int: 0-7>,
  "reason": "Detailed justification based on the criteria (2–3 sentences)"
}

Now, let’s get it started!
Conversation: {conversation}
Your evaluation: {JSON dictionary})PROMPT";
constexpr std::string_view k_en_relevance = R"PROMPT(Rate how well the response aligns with the topic and intent of the question.

Two criteria should be considered:
- Topic alignment: Is the response about the same subject as the question?
- Intent alignment: Does the response address the purpose behind the question?

Note: The level of detail, reasoning, or length of the response should not be considered here. Even a short or simple response can receive a high relevance score if it correctly addresses the question's intent.

Examples are provided to guide interpretation:

0: Completely irrelevant or non-responsive
The response is off-topic, nonsensical, or fails to engage with the question in any meaningful way.
  • Topic alignment: No
  • Intent alignment: No
  Example: Q: "Can you describe your experience with this product?", A: "I don't know." / "Get rich."

1: Topic is mentioned, but intent completely missed
The response includes a term or concept related to the question but does not address the question’s actual purpose.
  • Topic alignment: Yes
  • Intent alignment: No
  Example: Q: "Why did you choose this brand?", A: "The logo looks nice." (Mentions the topic, but doesn’t explain the decision)

2: On-topic, but only partially fulfills the intent
TThe response shows some understanding of the question’s purpose but provides limited or vague engagement.
  • Topic alignment: Yes
  • Intent alignment: Partially
  Example: Q: "What made this experience special?", A: "It was nice." (Sentiment expressed, but no clear reason is given)

3: Matches the topic and mostly fulfills the intent
The response addresses the question appropriately and reflects a good understanding of its purpose, though some details may be missing.
  • Topic alignment: Yes
  • Intent alignment: Mostly
  Example: Q: "What was your goal in using this app?", A: "To reduce stress." (Clearly aligned with the question’s intent)

4: Fully aligned with both topic and intent
The response directly and clearly addresses what the question is asking, fulfilling its purpose. (Detailed justification is not necessary, as long as the intent is clearly understood and responded to.)
  • Topic alignment: Yes
  • Intent alignment: Yes
  Example: Q: "Why did you like this product?", A: "It had a long-lasting scent and didn’t irritate my skin." (Clear, specific reason matching the question)

Read the criteria carefully and follow them faithfully.
Return your evaluation as a JSON dictionary without any additional text:

{
  "relevance": <int: 0-4>,
  "reason": "Detailed justification based on the criteria (2–3 sentences)"
}

Now, let's get it started!
Conversation: {conversation}
Your evaluation: {JSON dictionary})PROMPT";
constexpr std::string_view k_en_completeness = R"PROMPT(Rate how completely the response fulfills the informational requirements implied by the question.
Use the following 0–4 scale. The score must be an integer. Base your judgment on whether the response addresses all relevant parts of the question, and the depth or adequacy of the information provided.

Short answers like “yes” or “no” should not be automatically scored as 1:
  • If they clearly and directly address the question but lack elaboration → score 1 (Minimally Fulfilled)
  • If they are vague, off-topic, or do not engage with the question’s intent → score 0 (Not Fulfilled)

Important: Even short or concise responses can receive a 3 (Mostly Fulfilled) or 4 (Fully Fulfilled) if they meaningfully and precisely address all parts of the question.

For multi-part questions, check if each part is answered. Responses that leave parts unaddressed or only partially answered should receive lower scores.

0: Not Fulfilled
  • Response does not meaningfully address the question or is a placeholder, irrelevant, or nonsensical.
  e.g., “fdsa”, “I don’t know”, “What?”, “That’s private.”

1: Minimally Fulfilled
  • Mentions the topic but gives no substantive or relevant detail.
  • Typically applies to yes/no answers with no elaboration.
  e.g., “Movies are fun”, “I like it”, “Yes”, “No”

2: Partially Fulfilled
  • Response addresses only one part of a multi-part question, or answers a single-part question incompletely.
  e.g.,
    Q: “What’s your favorite movie and why?” → A: “Inception.”
    Q: “What did you like and dislike?” → A: “I liked it.” (missing ‘dislike’)

3: Mostly Fulfilled
  • All parts of the question are touched on, but detail is limited or vague.
  e.g.,
    Q: “What’s your favorite movie and why?” → A: “Inception, it’s cool.”
    Q: “What do you like and dislike?” → A: “I liked the packaging. Didn’t like the smell.”

4: Fully Fulfilled
  • Every part of the question is clearly and fully answered, with relevant detail or reasoning.
  e.g.,
    Q: “What’s your favorite movie and why?” → A: “Inception, because I love mind-bending plots and the visuals were stunning.”
    Q: “What do you like and dislike?” → A: “I liked the compact size and smooth texture. I disliked how quickly it wore off.”

Read the given criteria carefully and follow them faithfully.
Return your evaluation as a JSON dictionary without any additional text:

{
  "completeness": <int: 0-4>,
  "reason": "Detailed justification based on the criteria (2–3 sentences)"
}

Now, let’s get it started!
Conversation: {conversation}
Your evaluation: {JSON dictionary})PROMPT";
constexpr std::string_view k_en_overall_quality = R"PROMPT(Evaluate the overall quality of the user response using a 0–4 scale (integer only).
This score should represent a balanced assessment based on the combined performance across the following three dimensions:

  – Effort (0–1): Thoughtfulness, specificity, and detail
  – Relevance (0–1): Alignment with the topic and intent of the question
  – Completeness (0–1): Coverage of the informational requirements

Do not simply average the three scores. Instead, weigh the strengths and weaknesses reflected in both the scores and their justifications.
A response that performs strongly in one area but poorly in others may warrant a moderate overall score.
Likewise, a consistently adequate response across all dimensions may merit a higher score than one with extremes.

You will be provided with the following input:
  – effort score: {effort_score}
  – effort reason: {effort_reason}
  – relevance score: {relevance_score}
  – relevance reason: {relevance_reason}
  – completeness score: {completeness_score}
  – completeness reason: {completeness_reason}

Scoring scale:
  0 – Very Poor
  1 – Poor
  2 – Acceptable
  3 – Good
  4 – Excellent

Your reason should briefly explain:
(1) the strongest dimension,
(2) the weakest dimension, and
(3) how this balance supports your final score.

Return your evaluation as a JSON dictionary with no additional text:

{
  "overall_quality": <int: 0–4>,
  "reason": "Justification based on the criteria (2–3 sentences)"
}

Now, let's get it started!
Conversation: {conversation}
Your evaluation: {JSON dictionary})PROMPT";
constexpr std::string_view k_ko_system = R"PROMPT(당신은 인간-AI 대화 데이터셋을 평가하는 전문 평가자입니다. 당신의 임무는 주어진 기준에 따라 데이터셋에 있는 응답의 품질을 평가하는 것입니다.)PROMPT";
constexpr std::string_view k_ko_effort = R"PROMPT(사용자가 응답에 얼마나 많은 생각과 세부 내용을 담았는지 평가하세요.
다음 0–7 척도를 사용하세요. 점수는 반드시 정수여야 합니다.
정보량, 구체성, 그리고 사용자가 질문에 얼마나 잘 답했는지를 기준으로 판단하세요.

해석을 돕기 위한 예시는 다음과 같습니다:

0: 의미 있는 응답이 없음. 답변이 비어 있거나 질문과 전혀 관련이 없음.
  • 정보: 없음
  • 구체성: 없음
  • 질문에 대한 응답: 전혀 없음
  예: “N/A”, “몰라”, “ㅁㄴㅇㄹ”

1: 질문을 회피하는 기본 답변이나 자리 채우기식 답변처럼 모호하거나 회피적임.
  • 정보: 최소한이거나 형식적이거나 무시할 수준
  • 구체성: 없음
  • 질문에 대한 응답: 통찰이나 세부 내용 없이 겨우 반응함
  예: “좋아요”, “괜찮아요”, “모르겠어요”, “아마도”

2: 모호하거나 일반적인 의견. 한 단어 답변보다는 조금 길지만 여전히 알맹이가 부족함.
  • 정보: 매우 낮음
  • 구체성: 매우 낮음
  • 질문에 대한 응답: 겨우 반응함
  예: “전체적으로 꽤 좋았어요”, “나쁘지 않아요”, “좋네요”

3: 하나의 요소나 인상을 담은 짧은 의견.
  • 정보: 낮음
  • 구체성: 낮음
  • 질문에 대한 응답: 한 가지 측면을 부분적으로 다룸
  예: “버거가 좋았어요”, “감자튀김 최고”, “분위기 좋음”

4: 두 가지 측면을 언급해 조금 더 유익하지만 설명은 여전히 최소한임.
  • 정보: 약간 기본적임
  • 구체성: 제한적임
  • 질문에 대한 응답: 두 부분을 간단히 다룸
  예: “버거는 좋았어요. 서비스는 그럭저럭”, “음식은 괜찮은데 양이 적어요”

5: 여러 개의 분명한 의견과 구체적인 예시가 담긴 사려 깊은 응답.
  • 정보: 보통에서 상세함
  • 구체성: 보통에서 분명함
  • 질문에 대한 응답: 핵심 부분을 다룸
  예: “맛있지만 특별한 건 없었어요.”, “감자튀김은 바삭하고 버거는 따뜻했지만 너무 짰어요.”

6: 매우 풍부하고 섬세한 응답. 무엇이 눈에 띄었고 왜 그런지 설명함.
  • 정보: 매우 높음
  • 구체성: 매우 높음
  • 질문에 대한 응답: 통찰을 담아 질문을 깊이 있게 다룸
  예: “버거는 훈제 향이 났고 감자튀김은 뜨겁고 바삭했으며 빈티지한 분위기도 멋졌어요. 비싸지만 그만한 가치가 있어요.”

7: 매우 상세하고 사려 깊으며 완결된 응답. 여러 측면(예: 음식, 서비스, 분위기)을 깊이와 개성을 담아 평가함.
  • 정보: 포괄적임
  • 구체성: 깊음
  • 질문에 대한 응답: 충분하고 사려 깊게 다룸
  예: “버거가 기대 이상이었어요. 더블 베이컨 버거는 완벽하게 구워졌고 빵은 신선했으며 감자튀김은 딱 알맞게 바삭했어요. 직원들이 친절했고 자동차 극장 같은 구성이 경험을 특별하게 만들었어요.”

주어진 기준을 주의 깊게 읽고 충실히 따르세요.
다른 텍스트 없이 JSON 딕셔너리로 평가 결과를 반환하세요:

{
  "effort": <int: 0-7>,
  "reason": "기준에 근거한 상세한 판단 이유 (2–3문장)"
}

이제 시작하겠습니다!
Conversation: {conversation}
Your evaluation: {JSON dictionary})PROMPT";
constexpr std::string_view k_ko_relevance = R"PROMPT(응답이 질문의 주제 및 의도와 얼마나 잘 맞는지 평가하세요.

두 가지 기준을 고려해야 합니다:
- 주제 일치(Topic alignment): 응답이 질문과 같은 주제에 관한 것인가?
- 의도 일치(Intent alignment): 응답이 질문의 목적에 답하고 있는가?

참고: 여기서는 응답의 세부 수준, 논리, 길이를 고려하지 않습니다. 짧거나 단순한 응답이라도 질문의 의도에 올바르게 답하면 높은 관련성 점수를 받을 수 있습니다.

해석을 돕기 위한 예시는 다음과 같습니다:

0: 전혀 관련이 없거나 응답하지 않음
응답이 주제에서 벗어나 있거나, 무의미하거나, 질문에 의미 있게 관여하지 못함.
  • 주제 일치: 아니요
  • 의도 일치: 아니요
  예시: Q: "이 제품을 사용한 경험을 설명해 주시겠어요?", A: "모르겠어요." / "부자 되세요."

1: 주제는 언급되지만 의도는 완전히 놓침
응답에 질문과 관련된 용어나 개념이 포함되어 있지만 질문의 실제 목적에는 답하지 않음.
  • 주제 일치: 예
  • 의도 일치: 아니요
  예시: Q: "왜 이 브랜드를 선택하셨나요?", A: "로고가 예뻐 보여요." (주제는 언급하지만 결정 이유는 설명하지 않음)

2: 주제에는 맞지만 의도를 부분적으로만 충족함
응답이 질문의 목적을 어느 정도 이해하고 있지만 관여가 제한적이거나 모호함.
  • 주제 일치: 예
  • 의도 일치: 부분적
  예시: Q: "이 경험이 특별했던 이유는 무엇인가요?", A: "좋았어요." (감정은 표현했지만 분명한 이유가 없음)

3: 주제와 일치하고 의도를 대부분 충족함
응답이 질문에 적절히 답하고 그 목적을 잘 이해하고 있으나 일부 세부 내용이 빠져 있을 수 있음.
  • 주제 일치: 예
  • 의도 일치: 대부분
  예시: Q: "이 앱을 사용한 목적은 무엇이었나요?", A: "스트레스를 줄이려고요." (질문의 의도와 분명히 일치함)

4: 주제와 의도 모두에 완전히 일치함
응답이 질문이 묻는 바에 직접적이고 분명하게 답하여 그 목적을 충족함. (의도를 분명히 이해하고 답했다면 상세한 근거는 필요하지 않음.)
  • 주제 일치: 예
  • 의도 일치: 예
  예시: Q: "이 제품이 마음에 든 이유는 무엇인가요?", A: "향이 오래가고 피부에 자극이 없었어요." (질문에 맞는 분명하고 구체적인 이유)

기준을 주의 깊게 읽고 충실히 따르세요.
다른 텍스트 없이 JSON 딕셔너리로 평가 결과를 반환하세요:

{
  "relevance": <int: 0-4>,
  "reason": "기준에 근거한 상세한 판단 이유 (2–3문장)"
}

이제 시작하겠습니다!
Conversation: {conversation}
Your evaluation: {JSON dictionary})PROMPT";
constexpr std::string_view k_ko_completeness = R"PROMPT(응답이 질문에 담긴 정보 요구 사항을 얼마나 완전하게 충족하는지 평가하세요.
다음 0–4 척도를 사용하세요. 점수는 반드시 정수여야 합니다. 응답이 질문의 모든 관련 부분을 다루는지, 그리고 제공된 정보의 깊이나 적절성을 기준으로 판단하세요.

“예”나 “아니요” 같은 짧은 답변을 자동으로 1점 처리하지 마세요:
  • 질문에 분명하고 직접적으로 답하지만 부연 설명이 없다면 → 1점 (최소 충족)
  • 모호하거나, 주제에서 벗어나거나, 질문의 의도에 관여하지 않는다면 → 0점 (미충족)

중요: 짧거나 간결한 응답이라도 질문의 모든 부분을 의미 있고 정확하게 다룬다면 3점(대부분 충족)이나 4점(완전 충족)을 받을 수 있습니다.

여러 부분으로 이루어진 질문의 경우 각 부분에 답했는지 확인하세요. 일부를 다루지 않았거나 부분적으로만 답한 응답은 더 낮은 점수를 받아야 합니다.

0: 미충족 (Not Fulfilled)
  • 응답이 질문을 의미 있게 다루지 않거나, 자리 채우기식이거나, 관련이 없거나, 무의미함.
  예: “ㄹㅇㄴㅁ”, “모르겠어요”, “네?”, “비밀이에요.”

1: 최소 충족 (Minimally Fulfilled)
  • 주제를 언급하지만 실질적이거나 관련 있는 세부 내용이 없음.
  • 주로 부연 설명 없는 예/아니요 답변에 해당함.
  예: “영화는 재밌어요”, “좋아요”, “예”, “아니요”

2: 부분 충족 (Partially Fulfilled)
  • 여러 부분으로 된 질문 중 한 부분에만 답하거나, 한 부분으로 된 질문에 불완전하게 답함.
  예:
    Q: “가장 좋아하는 영화와 그 이유는 무엇인가요?” → A: “인셉션.”
    Q: “좋았던 점과 싫었던 점은 무엇인가요?” → A: “좋았어요.” (‘싫었던 점’ 누락)

3: 대부분 충족 (Mostly Fulfilled)
  • 질문의 모든 부분을 다루지만 세부 내용이 제한적이거나 모호함.
  예:
    Q: “가장 좋아하는 영화와 그 이유는 무엇인가요?” → A: “인셉션, 멋있어서요.”
    Q: “좋은 점과 싫은 점은 무엇인가요?” → A: “포장은 좋았어요. 냄새는 별로였어요.”

4: 완전 충족 (Fully Fulfilled)
  • 질문의 모든 부분에 관련 세부 내용이나 근거와 함께 분명하고 충분하게 답함.
  예:
    Q: “가장 좋아하는 영화와 그 이유는 무엇인가요?” → A: “인셉션이요, 머리를 쓰게 만드는 줄거리를 좋아하고 영상미도 굉장했거든요.”
    Q: “좋은 점과 싫은 점은 무엇인가요?” → A: “작은 크기와 부드러운 질감이 좋았어요. 금방 지워지는 점은 싫었어요.”

주어진 기준을 주의 깊게 읽고 충실히 따르세요.
다른 텍스트 없이 JSON 딕셔너리로 평가 결과를 반환하세요:

{
  "completeness": <int: 0-4>,
  "reason": "기준에 근거한 상세한 판단 이유 (2–3문장)"
}

이제 시작하겠습니다!
Conversation: {conversation}
Your evaluation: {JSON dictionary})PROMPT";
constexpr std::string_view k_ko_overall_quality = R"PROMPT(0–4 척도(정수만)로 사용자 응답의 전반적인 품질을 평가하세요.
이 점수는 다음 세 가지 차원에서의 종합적인 수행을 바탕으로 한 균형 잡힌 평가여야 합니다:

  – 노력(Effort) (0–1): 사려 깊음, 구체성, 세부 내용
  – 관련성(Relevance) (0–1): 질문의 주제 및 의도와의 일치
  – 완전성(Completeness) (0–1): 정보 요구 사항의 충족 범위

세 점수를 단순히 평균 내지 마세요. 대신 점수와 그 근거 모두에 드러난 강점과 약점을 따져 보세요.
한 영역에서는 뛰어나지만 다른 영역에서 부족한 응답은 중간 정도의 종합 점수가 적절할 수 있습니다.
마찬가지로, 모든 차원에서 꾸준히 적절한 응답은 극단적인 점수를 가진 응답보다 더 높은 점수를 받을 수 있습니다.

다음 입력이 제공됩니다:
  – effort score: {effort_score}
  – effort reason: {effort_reason}
  – relevance score: {relevance_score}
  – relevance reason: {relevance_reason}
  – completeness score: {completeness_score}
  – completeness reason: {completeness_reason}

점수 척도:
  0 – 매우 나쁨
  1 – 나쁨
  2 – 수용 가능
  3 – 좋음
  4 – 매우 좋음

판단 이유에는 다음을 간단히 설명하세요:
(1) 가장 강한 차원,
(2) 가장 약한 차원,
(3) 이 균형이 최종 점수를 어떻게 뒷받침하는지.

다른 텍스트 없이 JSON 딕셔너리로 평가 결과를 반환하세요:

{
  "overall_quality": <int: 0–4>,
  "reason": "기준에 근거한 판단 이유 (2–3문장)"
}

이제 시작하겠습니다!
Conversation: {conversation}
Your evaluation: {JSON dictionary})PROMPT";
constexpr std::string_view k_en_gibberish_system =
    "You are an annotator who decides whether short survey responses are meaningful text.";

constexpr std::string_view k_en_gibberish = R"PROMPT(Is the following sentence meaningful? A sentence is meaningful when it carries understandable content; it is not meaningful when it is gibberish such as random characters or keyboard mashing.
Output only one word: true if the sentence is meaningful, false otherwise.

Sentence: {sentence}
Answer:)PROMPT";

constexpr std::string_view k_ko_gibberish_system = "당신은 짧은 설문 응답이 의미 있는 텍스트인지 판단하는 주석자입니다.";

constexpr std::string_view k_ko_gibberish = R"PROMPT(다음 문장이 의미가 있습니까? 이해할 수 있는 내용을 담고 있으면 의미 있는 문장이고, 무작위 문자나 키보드를 마구 누른 것 같은 의미 없는 문자열이면 의미 없는 문장입니다.
한 단어로만 답하세요: 의미가 있으면 true, 그렇지 않으면 false.

Sentence: {sentence}
Answer:)PROMPT";

}  // namespace

std::string_view system_prompt(Language lang) { return lang == Language::english ? k_en_system : k_ko_system; }

std::string_view user_template(judge::Dimension dimension, Language lang) {
    const bool en = lang == Language::english;
    switch (dimension) {
        case judge::Dimension::effort: return en ? k_en_effort : k_ko_effort;
        case judge::Dimension::relevance: return en ? k_en_relevance : k_ko_relevance;
        case judge::Dimension::completeness: return en ? k_en_completeness : k_ko_completeness;
        case judge::Dimension::overall_quality: return en ? k_en_overall_quality : k_ko_overall_quality;
    }
    return {};
}

std::string_view gibberish_template(Language lang) {
    return lang == Language::english ? k_en_gibberish : k_ko_gibberish;
}

std::string_view gibberish_system_prompt(Language lang) {
    return lang == Language::english ? k_en_gibberish_system : k_ko_gibberish_system;
}

std::string render(std::string_view tmpl, const std::map<std::string, std::string, std::less<>>& slots) {
    std::string out;
    out.reserve(tmpl.size() + 256);
    std::size_t i = 0;
    while (i < tmpl.size()) {
        if (tmpl[i] == '{') {
            const auto close = tmpl.find('}', i + 1);
            if (close != std::string_view::npos) {
                const auto name = tmpl.substr(i + 1, close - i - 1);
                if (const auto it = slots.find(name); it != slots.end()) {
                    out += it->second;
                    i = close + 1;
                    continue;
                }
            }
        }
        out.push_back(tmpl[i]);
        ++i;
    }
    return out;
}

std::string format_conversation(const SurveyItem& item) {
    return "Q: " + utf8::trim(item.question) + "\nA: " + utf8::trim(item.response);
}

}  // namespace respeval::prompts
